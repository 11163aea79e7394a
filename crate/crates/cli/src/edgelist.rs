//! Plain-text edge lists: a header line `n <count>` followed by one
//! `u v` pair per line, whitespace-separated, 0-indexed. Blank lines are
//! ignored; everything else is an error that names its line.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

use wiener_core::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    MissingHeader,
    BadHeader { line: usize },
    ZeroOrder { line: usize },
    Malformed { line: usize },
    SelfLoop { line: usize, vertex: usize },
    DuplicateEdge { line: usize, u: usize, v: usize },
    OutOfRange { line: usize, vertex: usize, order: usize },
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeListError::MissingHeader => write!(f, "missing 'n <count>' header line"),
            EdgeListError::BadHeader { line } => {
                write!(f, "line {line}: expected header 'n <count>'")
            }
            EdgeListError::ZeroOrder { line } => {
                write!(f, "line {line}: graph order must be at least 1")
            }
            EdgeListError::Malformed { line } => {
                write!(f, "line {line}: expected two vertex indices 'u v'")
            }
            EdgeListError::SelfLoop { line, vertex } => {
                write!(f, "line {line}: self-loop at vertex {vertex}")
            }
            EdgeListError::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {{{u}, {v}}}")
            }
            EdgeListError::OutOfRange { line, vertex, order } => {
                write!(f, "line {line}: vertex {vertex} out of range for order {order}")
            }
        }
    }
}

impl Error for EdgeListError {}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        match order {
            None => {
                if tokens.len() != 2 || tokens[0] != "n" {
                    return Err(EdgeListError::BadHeader { line });
                }
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| EdgeListError::BadHeader { line })?;
                if n == 0 {
                    return Err(EdgeListError::ZeroOrder { line });
                }
                order = Some(n);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(EdgeListError::Malformed { line });
                }
                let u: usize = tokens[0]
                    .parse()
                    .map_err(|_| EdgeListError::Malformed { line })?;
                let v: usize = tokens[1]
                    .parse()
                    .map_err(|_| EdgeListError::Malformed { line })?;
                for w in [u, v] {
                    if w >= n {
                        return Err(EdgeListError::OutOfRange {
                            line,
                            vertex: w,
                            order: n,
                        });
                    }
                }
                if u == v {
                    return Err(EdgeListError::SelfLoop { line, vertex: u });
                }
                let key = (u.min(v), u.max(v));
                if !seen.insert(key) {
                    return Err(EdgeListError::DuplicateEdge {
                        line,
                        u: key.0,
                        v: key.1,
                    });
                }
                edges.push(key);
            }
        }
    }

    let n = order.ok_or(EdgeListError::MissingHeader)?;
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

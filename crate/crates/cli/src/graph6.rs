//! graph6 short form (orders 1..=62): one byte `n + 63`, then the upper
//! triangle of the adjacency matrix in column order, packed six bits per
//! printable character.

use std::error::Error;
use std::fmt;

use wiener_core::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    Empty,
    /// Long-form headers (first byte `~`) are not supported.
    LongForm,
    ZeroOrder,
    TooLarge { order: usize },
    InvalidChar { position: usize, byte: u8 },
    LengthMismatch { expected: usize, found: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 input"),
            Graph6Error::LongForm => write!(f, "graph6 long form (n > 62) is not supported"),
            Graph6Error::ZeroOrder => write!(f, "graph6 order 0 has no graph representation here"),
            Graph6Error::TooLarge { order } => {
                write!(f, "order {order} exceeds the graph6 short form limit {MAX_SHORT_ORDER}")
            }
            Graph6Error::InvalidChar { position, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {position}")
            }
            Graph6Error::LengthMismatch { expected, found } => {
                write!(f, "graph6 body has {found} characters, expected {expected}")
            }
        }
    }
}

impl Error for Graph6Error {}

// Bit i of the body corresponds to pairs(i) in column order:
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::TooLarge { order: n });
    }
    let mut out = vec![n as u8 + OFFSET];
    let mut current = 0u8;
    let mut filled = 0u8;
    for (u, v) in colex_pairs(n) {
        current <<= 1;
        if g.has_edge(u, v) {
            current |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(current + OFFSET);
            current = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((current << (6 - filled)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    let body = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(OFFSET..=126).contains(&bytes[0]) {
        return Err(Graph6Error::InvalidChar {
            position: 0,
            byte: bytes[0],
        });
    }
    let n = (bytes[0] - OFFSET) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(Graph6Error::LengthMismatch {
            expected,
            found: body.len(),
        });
    }
    for (i, &b) in body.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar {
                position: i + 1,
                byte: b,
            });
        }
    }
    let mut edges = Vec::new();
    for (i, (u, v)) in colex_pairs(n).enumerate() {
        let value = body[i / 6] - OFFSET;
        if value >> (5 - i % 6) & 1 == 1 {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded pairs are simple"))
}

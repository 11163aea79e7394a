//! Vertex connectivity by vertex-capacity maximum flow.
//!
//! Each vertex is split into an in-node and an out-node joined by a
//! unit-capacity arc, so an integral max flow between two non-adjacent
//! vertices counts internally vertex-disjoint paths, and the residual
//! reachability after the last augmentation yields a minimum vertex cut
//! of the same size (Menger's theorem).

use std::collections::VecDeque;
use std::error::Error;
use std::fmt;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConnectivityError {
    VertexOutOfRange { vertex: usize, order: usize },
    SameVertex { vertex: usize },
    AdjacentVertices { u: usize, v: usize },
    OrderTooSmall { order: usize },
}

impl fmt::Display for ConnectivityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            ConnectivityError::SameVertex { vertex } => {
                write!(f, "source and target are the same vertex {vertex}")
            }
            ConnectivityError::AdjacentVertices { u, v } => {
                write!(f, "vertices {u} and {v} are adjacent; no vertex cut separates them")
            }
            ConnectivityError::OrderTooSmall { order } => {
                write!(f, "vertex connectivity needs at least 2 vertices, got {order}")
            }
        }
    }
}

impl Error for ConnectivityError {}

/// A set of vertices whose deletion separates the witness pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCut {
    /// Cut vertices in increasing order.
    pub vertices: Vec<usize>,
    /// The pair the cut separates.
    pub separated_pair: (usize, usize),
}

impl VertexCut {
    /// Re-checks by BFS that deleting the cut leaves the witness pair in
    /// different components.
    pub fn separates(&self, g: &Graph) -> bool {
        let (s, t) = self.separated_pair;
        if self.vertices.contains(&s) || self.vertices.contains(&t) {
            return false;
        }
        let mut deleted = vec![false; g.n()];
        for &v in &self.vertices {
            deleted[v] = true;
        }
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !deleted[v] && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        !seen[t]
    }
}

// Unit-capacity flow network over split vertices. Arcs are stored in pairs
// so that `id ^ 1` is the reverse arc.
struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, cap: u32) {
        let id = self.to.len();
        self.to.push(b);
        self.cap.push(cap);
        self.to.push(a);
        self.cap.push(0);
        self.adj[a].push(id);
        self.adj[b].push(id + 1);
    }

    // One shortest augmenting path; returns false when the sink is
    // unreachable in the residual network.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && pred[v] == usize::MAX && v != source {
                    pred[v] = e;
                    if v == sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if pred[sink] == usize::MAX {
            return false;
        }
        let mut v = sink;
        while v != source {
            let e = pred[v];
            self.cap[e] -= 1;
            self.cap[e ^ 1] += 1;
            v = self.to[e ^ 1];
        }
        true
    }

    // Max flow value, stopping early once `limit` units have been pushed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.augment(source, sink) {
            flow += 1;
        }
        flow
    }

    // Nodes reachable from `source` in the residual network.
    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

// Vertex v becomes in-node 2v and out-node 2v+1. Edge arcs get capacity n,
// which no integral flow here can saturate, so a minimum cut consists of
// internal arcs only.
fn split_network(g: &Graph, s: usize, t: usize) -> FlowNet {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        if v != s && v != t {
            net.arc(2 * v, 2 * v + 1, 1);
        }
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, n as u32);
        net.arc(2 * v + 1, 2 * u, n as u32);
    }
    net
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), ConnectivityError> {
    if v < g.n() {
        Ok(())
    } else {
        Err(ConnectivityError::VertexOutOfRange {
            vertex: v,
            order: g.n(),
        })
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths together with
/// a minimum `s`–`t` vertex cut of the same size.
///
/// The cut is read off the residual reachability after the final flow, so
/// repeated runs return the same cut.
pub fn local_connectivity(
    g: &Graph,
    s: usize,
    t: usize,
) -> Result<(usize, VertexCut), ConnectivityError> {
    check_vertex(g, s)?;
    check_vertex(g, t)?;
    if s == t {
        return Err(ConnectivityError::SameVertex { vertex: s });
    }
    if g.has_edge(s, t) {
        return Err(ConnectivityError::AdjacentVertices {
            u: s.min(t),
            v: s.max(t),
        });
    }
    let mut net = split_network(g, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t, u32::MAX) as usize;
    let reach = net.residual_reachable(2 * s + 1);
    let vertices: Vec<usize> = (0..g.n())
        .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1])
        .collect();
    let cut = VertexCut {
        vertices,
        separated_pair: (s, t),
    };
    debug_assert_eq!(cut.vertices.len(), flow, "min cut must match max flow");
    debug_assert!(cut.separates(g));
    Ok((flow, cut))
}

// kappa truncated at `limit`: returns min(kappa(g), limit). Each local flow
// stops as soon as it reaches the running minimum, which cannot change the
// overall minimum. Once the running minimum drops below `stop_below` the
// answer to "is kappa >= stop_below" is settled, so the loop may quit.
fn kappa_capped(g: &Graph, limit: usize, stop_below: usize) -> usize {
    let n = g.n();
    debug_assert!(n >= 2);
    if !g.is_connected() {
        return 0;
    }
    let v0 = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("n >= 2");
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        if u != v0 && !g.has_edge(v0, u) {
            pairs.push((v0, u));
        }
    }
    let nb: Vec<usize> = g.neighbors(v0).collect();
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !g.has_edge(a, b) {
                pairs.push((a, b));
            }
        }
    }
    // A minimum-degree vertex adjacent to a clique of neighbors means the
    // whole graph is complete.
    let mut best = limit.min(n - 1);
    for (s, t) in pairs {
        if best < stop_below || best == 0 {
            break;
        }
        let mut net = split_network(g, s, t);
        best = best.min(net.max_flow(2 * s + 1, 2 * t, best as u32) as usize);
    }
    best
}

/// Vertex connectivity `kappa(g)`.
///
/// Disconnected graphs report 0; the complete graph `K_n` reports `n - 1`
/// by convention. Needs at least two vertices.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    if g.n() < 2 {
        return Err(ConnectivityError::OrderTooSmall { order: g.n() });
    }
    Ok(kappa_capped(g, g.n() - 1, 0))
}

/// Whether `g` stays connected (and larger than a single vertex) after
/// deleting any `k - 1` vertices. Total: never errors.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if g.n() < k + 1 {
        return false;
    }
    kappa_capped(g, k, k) >= k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harary::harary;

    #[test]
    fn path_has_single_cut_vertex() {
        let p4 = Graph::path(4);
        let (count, cut) = local_connectivity(&p4, 0, 3).unwrap();
        assert_eq!(count, 1);
        assert_eq!(cut.vertices.len(), 1);
        assert!(cut.vertices[0] == 1 || cut.vertices[0] == 2);
        assert!(cut.separates(&p4));
    }

    #[test]
    fn cycle_pair_needs_two_vertices() {
        let c5 = Graph::cycle(5);
        let (count, cut) = local_connectivity(&c5, 0, 2).unwrap();
        assert_eq!(count, 2);
        assert_eq!(cut.vertices.len(), 2);
        assert!(cut.vertices.contains(&1), "vertex 1 lies on every short side");
        assert!(cut.separates(&c5));
    }

    #[test]
    fn near_complete_pair_needs_all_others() {
        let edges = Graph::complete(5)
            .edges()
            .into_iter()
            .filter(|&e| e != (0, 1));
        let g = Graph::from_edges(5, edges).unwrap();
        let (count, cut) = local_connectivity(&g, 0, 1).unwrap();
        assert_eq!(count, 3);
        assert_eq!(cut.vertices, vec![2, 3, 4]);
    }

    #[test]
    fn local_connectivity_rejects_bad_pairs() {
        let p3 = Graph::path(3);
        assert_eq!(
            local_connectivity(&p3, 1, 1),
            Err(ConnectivityError::SameVertex { vertex: 1 })
        );
        assert_eq!(
            local_connectivity(&p3, 1, 2),
            Err(ConnectivityError::AdjacentVertices { u: 1, v: 2 })
        );
        assert_eq!(
            local_connectivity(&p3, 0, 5),
            Err(ConnectivityError::VertexOutOfRange { vertex: 5, order: 3 })
        );
    }

    #[test]
    fn disconnected_pair_has_empty_cut() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let (count, cut) = local_connectivity(&g, 0, 2).unwrap();
        assert_eq!(count, 0);
        assert!(cut.vertices.is_empty());
        assert!(cut.separates(&g));
    }

    #[test]
    fn connectivity_of_standard_graphs() {
        for n in 2..=7 {
            assert_eq!(vertex_connectivity(&Graph::complete(n)).unwrap(), n - 1);
        }
        for n in 3..=7 {
            assert_eq!(vertex_connectivity(&Graph::path(n)).unwrap(), 1);
            assert_eq!(vertex_connectivity(&Graph::cycle(n)).unwrap(), 2);
        }
        assert_eq!(vertex_connectivity(&harary(4, 8).unwrap()).unwrap(), 4);
    }

    #[test]
    fn disconnected_graph_has_zero_connectivity() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 0);
        assert!(!is_k_connected(&g, 1));
    }

    #[test]
    fn single_vertex_is_rejected() {
        assert_eq!(
            vertex_connectivity(&Graph::empty(1)),
            Err(ConnectivityError::OrderTooSmall { order: 1 })
        );
    }

    #[test]
    fn k_connectivity_examples() {
        let c6 = Graph::cycle(6);
        assert!(is_k_connected(&c6, 2));
        assert!(!is_k_connected(&c6, 3));
        assert!(is_k_connected(&harary(3, 9).unwrap(), 3));
        // K_{k+1} is k-connected by convention.
        assert!(is_k_connected(&Graph::complete(4), 3));
        assert!(!is_k_connected(&Graph::complete(4), 4));
    }

    #[test]
    fn connectivity_never_exceeds_min_degree() {
        for (k, n) in [(2, 6), (3, 8), (3, 9), (4, 9)] {
            let g = harary(k, n).unwrap();
            assert!(vertex_connectivity(&g).unwrap() <= g.min_degree());
        }
    }
}

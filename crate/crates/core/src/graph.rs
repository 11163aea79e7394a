//! Simple undirected graphs with sorted adjacency sets, and the BFS-based
//! distance invariants: distance rows, layer profiles, vertex status,
//! eccentricity, diameter and the Wiener index.
//!
//! Graphs are immutable values; edits return a new graph. Every operation
//! that sums distances requires a connected input and fails loudly with the
//! first unreached vertex otherwise.

use std::collections::{BTreeSet, VecDeque};
use std::error::Error;
use std::fmt;

/// Distance sentinel for unreachable vertices.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, order: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    /// A distance invariant was requested on a disconnected graph; carries
    /// one vertex that the BFS never reached.
    Disconnected { unreached: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::Disconnected { unreached } => {
                write!(f, "graph is disconnected: vertex {unreached} is unreachable")
            }
        }
    }
}

impl Error for GraphError {}

/// A finite simple undirected graph on vertices `0..n`.
///
/// Neighbors are kept in sorted sets, so iteration order and therefore
/// every derived output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n == 0`; the empty vertex set is not a graph here.
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1, "graph order must be at least 1");
        Graph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Path `P_n` with vertices in line order `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.adj[v - 1].insert(v);
            g.adj[v].insert(v - 1);
        }
        g
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.adj[0].insert(n - 1);
        g.adj[n - 1].insert(0);
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(BTreeSet::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n(),
            })
        }
    }

    /// Returns a copy of the graph with the edge `{u, v}` added.
    ///
    /// The receiver is unchanged; loops and existing edges are rejected.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Single-source shortest-path distances by breadth-first search.
    /// Unreachable vertices get the [`INFINITY`] sentinel.
    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![INFINITY; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::with_capacity(self.n());
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == INFINITY {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        Ok(DistanceRow { source, dist })
    }

    /// Sizes of the distance layers `N(source, i)` for `i = 0..=ecc(source)`.
    /// Requires a connected graph: the layers must partition the vertex set.
    pub fn layer_profile(&self, source: usize) -> Result<LayerProfile, GraphError> {
        let row = self.bfs_distances(source)?;
        if let Some(unreached) = row.unreached() {
            return Err(GraphError::Disconnected { unreached });
        }
        let ecc = row.max_finite();
        let mut sizes = vec![0usize; ecc as usize + 1];
        for &d in &row.dist {
            sizes[d as usize] += 1;
        }
        Ok(LayerProfile { source, sizes, ecc })
    }

    /// Status of `source`: the sum of distances from `source` to every
    /// other vertex. In debug builds the direct distance sum is checked
    /// against the layer-weighted sum `sum_i i * |N(source, i)|`.
    pub fn status(&self, source: usize) -> Result<u64, GraphError> {
        let row = self.bfs_distances(source)?;
        if let Some(unreached) = row.unreached() {
            return Err(GraphError::Disconnected { unreached });
        }
        let direct: u64 = row.dist.iter().map(|&d| u64::from(d)).sum();
        #[cfg(debug_assertions)]
        {
            let profile = self.layer_profile(source)?;
            debug_assert_eq!(direct, profile.weighted_sum(), "status routes disagree");
        }
        Ok(direct)
    }

    /// Largest distance from `source` to any vertex; connected input only.
    pub fn eccentricity(&self, source: usize) -> Result<u32, GraphError> {
        let row = self.bfs_distances(source)?;
        if let Some(unreached) = row.unreached() {
            return Err(GraphError::Disconnected { unreached });
        }
        Ok(row.max_finite())
    }

    /// Maximum eccentricity over all vertices; connected input only.
    pub fn diameter(&self) -> Result<u32, GraphError> {
        let mut diam = 0;
        for v in 0..self.n() {
            diam = diam.max(self.eccentricity(v)?);
        }
        Ok(diam)
    }

    /// Wiener index: the sum of distances over unordered vertex pairs,
    /// computed as half the sum of all vertex statuses.
    pub fn wiener(&self) -> Result<u64, GraphError> {
        let mut total = 0u64;
        for v in 0..self.n() {
            total += self.status(v)?;
        }
        debug_assert_eq!(total % 2, 0, "status total over all vertices must be even");
        Ok(total / 2)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0)
            .map(|row| row.unreached().is_none())
            .unwrap_or(false)
    }
}

/// One row of the distance matrix: distances from `source` to every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceRow {
    pub fn is_reachable(&self, v: usize) -> bool {
        self.dist[v] != INFINITY
    }

    /// Smallest unreachable vertex, if any.
    pub fn unreached(&self) -> Option<usize> {
        self.dist.iter().position(|&d| d == INFINITY)
    }

    /// Largest finite distance in the row.
    pub fn max_finite(&self) -> u32 {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != INFINITY)
            .max()
            .unwrap_or(0)
    }
}

/// BFS layer sizes `|N(source, i)|` for `i = 0..=ecc`; for a connected
/// graph the layers partition the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerProfile {
    pub source: usize,
    pub sizes: Vec<usize>,
    pub ecc: u32,
}

impl LayerProfile {
    /// The status of the source computed from layers: `sum_i i * sizes[i]`.
    pub fn weighted_sum(&self) -> u64 {
        self.sizes
            .iter()
            .enumerate()
            .map(|(i, &s)| i as u64 * s as u64)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harary::harary;

    /// Independent distance oracle: Floyd–Warshall over the full matrix.
    fn fw_distances(g: &Graph) -> Vec<Vec<u64>> {
        let n = g.n();
        let inf = u64::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for v in 0..n {
            d[v][v] = 0;
            for u in g.neighbors(v) {
                d[v][u] = 1;
            }
        }
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][m] + d[m][j] < d[i][j] {
                        d[i][j] = d[i][m] + d[m][j];
                    }
                }
            }
        }
        d
    }

    fn fw_wiener(g: &Graph) -> u64 {
        let d = fw_distances(g);
        let n = g.n();
        let mut w = 0;
        for i in 0..n {
            for j in i + 1..n {
                w += d[i][j];
            }
        }
        w
    }

    #[test]
    fn bfs_distances_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.bfs_distances(0).unwrap().dist, vec![0, 1, 1, 1]);

        let p4 = Graph::path(4);
        assert_eq!(p4.bfs_distances(0).unwrap().dist, vec![0, 1, 2, 3]);

        let c6 = Graph::cycle(6);
        assert_eq!(c6.bfs_distances(0).unwrap().dist, vec![0, 1, 2, 3, 2, 1]);
    }

    #[test]
    fn bfs_rejects_bad_source() {
        let g = Graph::path(3);
        assert_eq!(
            g.bfs_distances(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn layer_profiles() {
        let c6 = Graph::cycle(6);
        let lp = c6.layer_profile(0).unwrap();
        assert_eq!(lp.sizes, vec![1, 2, 2, 1]);
        assert_eq!(lp.ecc, 3);

        let k5 = Graph::complete(5);
        let lp = k5.layer_profile(0).unwrap();
        assert_eq!(lp.sizes, vec![1, 4]);
        assert_eq!(lp.ecc, 1);

        let h48 = harary(4, 8).unwrap();
        let lp = h48.layer_profile(0).unwrap();
        assert_eq!(lp.sizes, vec![1, 4, 3]);
        assert_eq!(lp.ecc, 2);
    }

    #[test]
    fn layer_profile_reports_unreached_vertex() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.layer_profile(0), Err(GraphError::Disconnected { unreached: 2 }));
    }

    #[test]
    fn status_examples() {
        for n in 2..=7 {
            let kn = Graph::complete(n);
            for v in 0..n {
                assert_eq!(kn.status(v).unwrap(), (n - 1) as u64);
            }
        }
        assert_eq!(Graph::path(4).status(0).unwrap(), 6);

        let h48 = harary(4, 8).unwrap();
        for v in 0..8 {
            assert_eq!(h48.status(v).unwrap(), 10);
        }
    }

    #[test]
    fn eccentricity_and_diameter() {
        for n in 2..=8 {
            let p = Graph::path(n);
            assert_eq!(p.eccentricity(0).unwrap(), (n - 1) as u32);
            assert_eq!(p.diameter().unwrap(), (n - 1) as u32);
            assert_eq!(Graph::complete(n).diameter().unwrap(), 1);
        }
        assert_eq!(harary(4, 10).unwrap().diameter().unwrap(), 3);
    }

    #[test]
    fn wiener_examples() {
        for n in 2..=8 {
            let kn = Graph::complete(n);
            assert_eq!(kn.wiener().unwrap(), (n * (n - 1) / 2) as u64);
        }
        let p5 = Graph::path(5);
        assert_eq!(p5.wiener().unwrap(), fw_wiener(&p5));
        assert_eq!(p5.wiener().unwrap(), 20);

        let c6 = Graph::cycle(6);
        assert_eq!(c6.wiener().unwrap(), fw_wiener(&c6));
        assert_eq!(c6.wiener().unwrap(), 27);
    }

    #[test]
    fn wiener_of_single_vertex_is_zero() {
        assert_eq!(Graph::empty(1).wiener().unwrap(), 0);
    }

    #[test]
    fn wiener_rejects_disconnected() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(g.wiener(), Err(GraphError::Disconnected { unreached: 2 }));
    }

    #[test]
    fn add_edge_value_semantics() {
        let p3 = Graph::path(3);
        let c3 = p3.add_edge(0, 2).unwrap();
        assert_eq!(c3, Graph::cycle(3));
        assert_eq!(p3.edge_count(), 2, "original must be unchanged");

        assert_eq!(p3.add_edge(1, 1), Err(GraphError::SelfLoop { vertex: 1 }));
        assert_eq!(p3.add_edge(1, 0), Err(GraphError::DuplicateEdge { u: 0, v: 1 }));
    }

    #[test]
    fn chord_strictly_decreases_wiener() {
        let c5 = Graph::cycle(5);
        let with_chord = c5.add_edge(0, 2).unwrap();
        assert_eq!(c5.wiener().unwrap(), fw_wiener(&c5));
        assert_eq!(with_chord.wiener().unwrap(), fw_wiener(&with_chord));
        assert_eq!(c5.wiener().unwrap(), 15);
        assert_eq!(with_chord.wiener().unwrap(), 14);
    }

    #[test]
    fn delete_then_restore_edge_round_trips() {
        let k4 = Graph::complete(4);
        let minus = Graph::from_edges(4, k4.edges().into_iter().filter(|&e| e != (0, 1))).unwrap();
        assert_eq!(minus.add_edge(0, 1).unwrap(), k4);
    }

    #[test]
    fn edges_are_sorted_and_consistent() {
        let g = Graph::from_edges(4, [(3, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 3) && g.has_edge(3, 0));
        assert_eq!(g.degrees(), vec![2, 2, 1, 1]);
        assert_eq!(g.min_degree(), 1);
    }

    #[test]
    fn status_agrees_with_floyd_warshall_on_harary_graphs() {
        for (k, n) in [(2, 7), (3, 8), (3, 9), (4, 11), (5, 12)] {
            let g = harary(k, n).unwrap();
            let fw = fw_distances(&g);
            for v in 0..n {
                let direct: u64 = fw[v].iter().sum();
                assert_eq!(g.status(v).unwrap(), direct);
                assert_eq!(g.layer_profile(v).unwrap().weighted_sum(), direct);
            }
        }
    }
}

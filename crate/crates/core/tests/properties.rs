//! Property tests for the distance and connectivity invariants, checked
//! against independent oracles (Floyd–Warshall distances, brute-force
//! subset-deletion connectivity).

use proptest::prelude::*;

use wiener_core::{
    is_k_connected, local_connectivity, vertex_connectivity, Graph, INFINITY,
};

/// Random labeled graph on 2..=7 vertices as an edge-subset bitmask.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..=7).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| {
            wiener_core::graph_from_bitmask(n, mask).expect("order within cap")
        })
    })
}

fn arb_connected_graph() -> impl Strategy<Value = Graph> {
    arb_graph().prop_filter("connected graphs only", Graph::is_connected)
}

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

/// Brute-force vertex connectivity: smallest deletion set that disconnects,
/// or n - 1 when none exists.
fn kappa_brute(g: &Graph) -> usize {
    let n = g.n();
    assert!(n >= 2);
    if !g.is_connected() {
        return 0;
    }
    for size in 1..=n.saturating_sub(2) {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != size {
                continue;
            }
            if disconnects(g, mask) {
                return size;
            }
        }
    }
    n - 1
}

fn disconnects(g: &Graph, deleted: u32) -> bool {
    let n = g.n();
    let alive: Vec<usize> = (0..n).filter(|&v| deleted >> v & 1 == 0).collect();
    if alive.len() < 2 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if deleted >> v & 1 == 0 && !seen[v] {
                seen[v] = true;
                reached += 1;
                stack.push(v);
            }
        }
    }
    reached < alive.len()
}

proptest! {
    /// Status through the direct distance sum equals the layer-weighted sum.
    #[test]
    fn status_two_routes_agree(g in arb_connected_graph()) {
        for v in 0..g.n() {
            let direct = g.status(v).unwrap();
            let layered = g.layer_profile(v).unwrap().weighted_sum();
            prop_assert_eq!(direct, layered);
        }
    }

    /// The status total is even and the Wiener index is half of it; both
    /// agree with Floyd-Warshall.
    #[test]
    fn wiener_is_half_the_status_total(g in arb_connected_graph()) {
        let statuses: Vec<u64> = (0..g.n()).map(|v| g.status(v).unwrap()).collect();
        let total: u64 = statuses.iter().sum();
        prop_assert_eq!(total % 2, 0);
        prop_assert_eq!(g.wiener().unwrap(), total / 2);

        let fw = fw_distances(&g);
        let mut by_pairs = 0;
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                by_pairs += fw[i][j];
            }
        }
        prop_assert_eq!(g.wiener().unwrap(), by_pairs);
    }

    /// Adding any non-edge to a connected graph strictly decreases the
    /// Wiener index.
    #[test]
    fn adding_an_edge_strictly_decreases_wiener(
        g in arb_connected_graph(),
        pick in any::<proptest::sample::Index>(),
    ) {
        let mut non_edges = Vec::new();
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if !g.has_edge(u, v) {
                    non_edges.push((u, v));
                }
            }
        }
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        let denser = g.add_edge(u, v).unwrap();
        prop_assert!(denser.wiener().unwrap() < g.wiener().unwrap());
    }

    /// Layer sizes sum to n, and every layer up to the eccentricity is
    /// non-empty.
    #[test]
    fn layer_profile_partitions_the_vertices(g in arb_connected_graph()) {
        for v in 0..g.n() {
            let lp = g.layer_profile(v).unwrap();
            prop_assert_eq!(lp.sizes.len(), lp.ecc as usize + 1);
            prop_assert_eq!(lp.sizes[0], 1);
            prop_assert_eq!(lp.sizes.iter().sum::<usize>(), g.n());
            prop_assert!(lp.sizes.iter().all(|&s| s >= 1));
        }
    }

    /// Distances of adjacent vertices differ by at most 1.
    #[test]
    fn distance_rows_step_by_at_most_one(g in arb_graph(), source in 0usize..7) {
        prop_assume!(source < g.n());
        let row = g.bfs_distances(source).unwrap();
        for (u, v) in g.edges() {
            if row.dist[u] != INFINITY && row.dist[v] != INFINITY {
                let hi = row.dist[u].max(row.dist[v]);
                let lo = row.dist[u].min(row.dist[v]);
                prop_assert!(hi - lo <= 1);
            }
        }
    }

    /// Deleting the layer N(x, i) separates x from every strictly deeper
    /// layer.
    #[test]
    fn middle_layers_are_vertex_cuts(g in arb_connected_graph(), source in 0usize..7) {
        prop_assume!(source < g.n());
        let row = g.bfs_distances(source).unwrap();
        let ecc = row.max_finite();
        prop_assume!(ecc >= 2);
        for i in 1..ecc {
            let mut deleted = vec![false; g.n()];
            for v in 0..g.n() {
                if row.dist[v] == i {
                    deleted[v] = true;
                }
            }
            let mut seen = vec![false; g.n()];
            seen[source] = true;
            let mut stack = vec![source];
            while let Some(u) = stack.pop() {
                for v in g.neighbors(u) {
                    if !deleted[v] && !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            for v in 0..g.n() {
                if row.dist[v] > i && row.dist[v] != INFINITY {
                    prop_assert!(!seen[v], "layer {i} fails to cut off vertex {v}");
                }
            }
        }
    }

    /// Flow-based connectivity equals brute-force subset deletion.
    #[test]
    fn vertex_connectivity_matches_brute_force(g in arb_graph()) {
        prop_assert_eq!(vertex_connectivity(&g).unwrap(), kappa_brute(&g));
    }

    /// kappa never exceeds the minimum degree.
    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph()) {
        prop_assert!(vertex_connectivity(&g).unwrap() <= g.min_degree());
    }

    /// is_k_connected is consistent with exact kappa and the order rule.
    #[test]
    fn k_connectivity_consistent_with_kappa(g in arb_graph(), k in 1usize..=7) {
        let kappa = vertex_connectivity(&g).unwrap();
        prop_assert_eq!(is_k_connected(&g, k), g.n() >= k + 1 && kappa >= k);
    }

    /// Menger consistency: the path count equals the returned cut size and
    /// the cut actually separates the pair.
    #[test]
    fn local_connectivity_is_menger_consistent(g in arb_graph()) {
        for s in 0..g.n() {
            for t in s + 1..g.n() {
                if g.has_edge(s, t) {
                    continue;
                }
                let (count, cut) = local_connectivity(&g, s, t).unwrap();
                prop_assert_eq!(count, cut.vertices.len());
                prop_assert!(cut.separates(&g));
                prop_assert!(!cut.vertices.contains(&s));
                prop_assert!(!cut.vertices.contains(&t));
            }
        }
    }
}

//! Round-trip invariants for the two serialization formats.

use proptest::prelude::*;

use wiener_cli::{decode_graph6, encode_graph6, format_edge_list, parse_edge_list};
use wiener_core::Graph;

/// Random graph on up to 20 vertices, dense enough to exercise multi-byte
/// graph6 bodies.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=20).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        (Just((n, pairs)), proptest::collection::vec(any::<bool>(), len)).prop_map(
            |((n, pairs), picks)| {
                let edges = pairs
                    .into_iter()
                    .zip(picks)
                    .filter(|&(_, keep)| keep)
                    .map(|(e, _)| e);
                Graph::from_edges(n, edges).expect("pairs are simple")
            },
        )
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_is_identity(g in arb_graph()) {
        let coded = encode_graph6(&g).expect("order fits the short form");
        let back = decode_graph6(&coded).expect("own encoding decodes");
        prop_assert_eq!(back, g);
    }

    #[test]
    fn edge_list_round_trip_is_identity(g in arb_graph()) {
        let text = format_edge_list(&g);
        let back = parse_edge_list(&text).expect("own formatting parses");
        prop_assert_eq!(back, g);
    }

    /// Encoding is canonical: decode then re-encode reproduces the input
    /// string for any valid graph6 body.
    #[test]
    fn graph6_reencoding_is_stable(g in arb_graph()) {
        let coded = encode_graph6(&g).unwrap();
        let recoded = encode_graph6(&decode_graph6(&coded).unwrap()).unwrap();
        prop_assert_eq!(recoded, coded);
    }
}

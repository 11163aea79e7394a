//! The Harary graph `H_{k,n}`: the k-connected graph on n circularly
//! arranged vertices with the minimum possible number of edges,
//! `ceil(k*n/2)`. The construction depends on the parities of k and n.

use std::error::Error;
use std::fmt;

use crate::graph::Graph;

/// Which of the three construction cases applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityCase {
    /// `k` even: each vertex joins the nearest `k/2` vertices both ways
    /// around the circle.
    Even,
    /// `k` odd, `n` even: nearest `(k-1)/2` both ways plus the
    /// diametrically opposite vertex.
    OddEven,
    /// both odd: `H_{k-1,n}` plus the diagonals `{i, i + (n-1)/2}` for
    /// `0 <= i <= (n-1)/2`; vertex `(n-1)/2` ends up with degree `k+1`.
    OddOdd,
}

impl ParityCase {
    pub fn of(k: usize, n: usize) -> ParityCase {
        match (k % 2 == 0, n % 2 == 0) {
            (true, _) => ParityCase::Even,
            (false, true) => ParityCase::OddEven,
            (false, false) => ParityCase::OddOdd,
        }
    }
}

/// Validated parameters `(k, n)` with the parity case resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HararySpec {
    pub k: usize,
    pub n: usize,
    pub case: ParityCase,
}

impl HararySpec {
    pub fn new(k: usize, n: usize) -> Result<Self, HararyError> {
        if k < 2 {
            return Err(HararyError::ConnectivityTooSmall { k });
        }
        if n <= k {
            return Err(HararyError::OrderTooSmall { k, n });
        }
        Ok(HararySpec {
            k,
            n,
            case: ParityCase::of(k, n),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HararyError {
    ConnectivityTooSmall { k: usize },
    OrderTooSmall { k: usize, n: usize },
}

impl fmt::Display for HararyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HararyError::ConnectivityTooSmall { k } => {
                write!(f, "Harary graphs need k >= 2, got k = {k}")
            }
            HararyError::OrderTooSmall { k, n } => {
                write!(f, "Harary graphs need n > k, got n = {n}, k = {k}")
            }
        }
    }
}

impl Error for HararyError {}

// Circulant part: i ~ i +- j (mod n) for 1 <= j <= half. Since half < n/2
// the offsets never collide; the guard only skips the mirror insert.
fn nearest_neighbors(g: &mut Graph, n: usize, half: usize) {
    for i in 0..n {
        for j in 1..=half {
            let v = (i + j) % n;
            if !g.has_edge(i, v) {
                g.insert_edge(i, v).expect("circulant edge must be simple");
            }
        }
    }
}

/// Builds `H_{k,n}` for `n > k >= 2`.
pub fn harary(k: usize, n: usize) -> Result<Graph, HararyError> {
    let spec = HararySpec::new(k, n)?;
    let mut g = Graph::empty(n);
    match spec.case {
        ParityCase::Even => {
            nearest_neighbors(&mut g, n, k / 2);
        }
        ParityCase::OddEven => {
            nearest_neighbors(&mut g, n, (k - 1) / 2);
            for i in 0..n / 2 {
                g.insert_edge(i, i + n / 2).expect("diameter edge must be new");
            }
        }
        ParityCase::OddOdd => {
            nearest_neighbors(&mut g, n, (k - 1) / 2);
            // Both the i = 0 and i = (n-1)/2 diagonals touch vertex
            // (n-1)/2, which is what raises its degree to k+1.
            for i in 0..=(n - 1) / 2 {
                g.insert_edge(i, i + (n - 1) / 2)
                    .expect("diagonal edge must be new");
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expected_edge_count(k: usize, n: usize) -> usize {
        (k * n).div_ceil(2)
    }

    #[test]
    fn even_case_gives_cycle_for_k2() {
        assert_eq!(harary(2, 5).unwrap(), Graph::cycle(5));
    }

    #[test]
    fn odd_even_case_adds_diameters() {
        let g = harary(3, 8).unwrap();
        assert_eq!(g.edge_count(), 12);
        for i in 0..8 {
            assert!(g.has_edge(i, (i + 1) % 8));
            assert!(g.has_edge(i, (i + 4) % 8));
            assert_eq!(g.degree(i), 3);
        }
    }

    #[test]
    fn odd_odd_case_matches_definition() {
        let g = harary(3, 9).unwrap();
        let mut expected = Graph::cycle(9);
        for (u, v) in [(0, 4), (1, 5), (2, 6), (3, 7), (4, 8)] {
            expected = expected.add_edge(u, v).unwrap();
        }
        assert_eq!(g, expected);
        assert_eq!(g.edge_count(), 14);
        for v in 0..9 {
            assert_eq!(g.degree(v), if v == 4 { 4 } else { 3 });
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(harary(1, 5), Err(HararyError::ConnectivityTooSmall { k: 1 }));
        assert_eq!(harary(4, 4), Err(HararyError::OrderTooSmall { k: 4, n: 4 }));
        assert_eq!(harary(4, 3), Err(HararyError::OrderTooSmall { k: 4, n: 3 }));
    }

    #[test]
    fn parity_case_resolution() {
        assert_eq!(HararySpec::new(4, 9).unwrap().case, ParityCase::Even);
        assert_eq!(HararySpec::new(3, 8).unwrap().case, ParityCase::OddEven);
        assert_eq!(HararySpec::new(3, 9).unwrap().case, ParityCase::OddOdd);
    }

    #[test]
    fn edge_counts_match_minimum() {
        for k in 2..=7 {
            for n in k + 1..=20 {
                let g = harary(k, n).unwrap();
                assert_eq!(g.edge_count(), expected_edge_count(k, n), "H_{{{k},{n}}}");
            }
        }
    }

    #[test]
    fn degree_sequences_by_parity() {
        for k in 2..=7 {
            for n in k + 1..=20 {
                let g = harary(k, n).unwrap();
                let degrees = g.degrees();
                if k % 2 == 0 || n % 2 == 0 {
                    assert!(degrees.iter().all(|&d| d == k));
                } else {
                    let heavy: Vec<usize> = (0..n).filter(|&v| degrees[v] == k + 1).collect();
                    assert_eq!(heavy, vec![(n - 1) / 2]);
                    assert!((0..n)
                        .filter(|&v| v != (n - 1) / 2)
                        .all(|v| degrees[v] == k));
                }
            }
        }
    }

    #[test]
    fn rotation_is_automorphism_when_some_parity_is_even() {
        for k in 2..=6 {
            for n in k + 1..=16 {
                if k % 2 == 1 && n % 2 == 1 {
                    continue;
                }
                let g = harary(k, n).unwrap();
                for (u, v) in g.edges() {
                    assert!(
                        g.has_edge((u + 1) % n, (v + 1) % n),
                        "shift must preserve edges of H_{{{k},{n}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn complete_graph_at_minimum_order() {
        assert_eq!(harary(4, 5).unwrap(), Graph::complete(5));
        assert_eq!(harary(3, 4).unwrap(), Graph::complete(4));
    }
}

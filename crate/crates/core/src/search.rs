//! Exhaustive search over all labeled simple graphs of small order.
//!
//! Graphs are edge-subset bitmasks over the `C(n,2)` vertex pairs in
//! lexicographic order, enumerated in increasing numeric order. The scan
//! partitions the mask range into fixed-width-prefix chunks, reduces each
//! chunk independently, and merges chunk results in chunk order, so every
//! report (including witnesses) is identical for any worker count.
//!
//! Candidates are pruned by minimum degree (necessary for k-connectivity)
//! and a bitmask connectivity check before the flow-based k-connectivity
//! test runs. A graph that beats one of the bounds would disprove a
//! theorem, so report constructors turn it into a hard error carrying the
//! witness edge list.

use std::error::Error;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::closed_form::{diameter_bound, status_bound, wiener_bound};
use crate::connectivity::is_k_connected;
use crate::graph::Graph;
use crate::rational::{self, Rational};

/// Enumeration is capped at 8 vertices (2^28 edge subsets).
pub const MAX_ENUM_ORDER: usize = 8;

/// Orders above this need [`ScanOptions::allow_order_eight`]; a full n = 8
/// scan visits 268 million masks and runs for minutes, not seconds.
pub const DEFAULT_SCAN_ORDER_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    OrderOutOfRange { n: usize, cap: usize },
    InvalidConnectivity { n: usize, k: usize },
    /// A scanned graph exceeded one of the proven bounds. This is a
    /// build-stopping event; the witness is serialized in the message.
    BoundViolation {
        quantity: &'static str,
        n: usize,
        k: usize,
        observed: String,
        bound: String,
        witness: Vec<(usize, usize)>,
    },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::OrderOutOfRange { n, cap } => {
                write!(f, "order {n} outside enumeration range 1..={cap}")
            }
            SearchError::InvalidConnectivity { n, k } => {
                write!(f, "connectivity k = {k} invalid for order n = {n} (needs n - 1 > k >= 1)")
            }
            SearchError::BoundViolation {
                quantity,
                n,
                k,
                observed,
                bound,
                witness,
            } => {
                write!(
                    f,
                    "{quantity} bound violated at n = {n}, k = {k}: observed {observed} > bound {bound}; witness edges {witness:?}"
                )
            }
        }
    }
}

impl Error for SearchError {}

/// Vertex pairs `(u, v)`, `u < v`, in lexicographic order; bit `i` of an
/// edge mask corresponds to `pairs[i]`.
pub fn edge_pair_order(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// The labeled graph encoded by `mask` over [`edge_pair_order`].
pub fn graph_from_bitmask(n: usize, mask: u64) -> Result<Graph, SearchError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(SearchError::OrderOutOfRange {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let pairs = edge_pair_order(n);
    debug_assert!(mask < (1u64 << pairs.len()) || pairs.is_empty() && mask == 0);
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .map(|(_, &p)| p);
    Ok(Graph::from_edges(n, edges).expect("bitmask edges are simple by construction"))
}

/// Iterator over every labeled simple graph on `n` vertices, by edge
/// bitmask in increasing numeric order.
pub struct GraphEnumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl GraphEnumeration {
    pub fn bitmask_count(&self) -> u64 {
        self.total
    }
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Some(Graph::from_edges(self.n, edges).expect("bitmask edges are simple"))
    }
}

/// Yields all `2^C(n,2)` labeled graphs on `n` vertices, `1 <= n <= 8`.
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumeration, SearchError> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return Err(SearchError::OrderOutOfRange {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    let pairs = edge_pair_order(n);
    let total = 1u64 << pairs.len();
    Ok(GraphEnumeration {
        n,
        pairs,
        next: 0,
        total,
    })
}

// Compact adjacency-bitmask view used in the scan inner loop.
#[derive(Clone, Copy)]
struct MaskGraph {
    n: usize,
    adj: [u8; MAX_ENUM_ORDER],
}

impl MaskGraph {
    fn build(n: usize, pairs: &[(usize, usize)], mask: u64) -> MaskGraph {
        let mut adj = [0u8; MAX_ENUM_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[i];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        MaskGraph { n, adj }
    }

    fn min_degree(&self) -> u32 {
        (0..self.n)
            .map(|v| self.adj[v].count_ones())
            .min()
            .unwrap_or(0)
    }

    fn full(&self) -> u8 {
        if self.n == 8 {
            u8::MAX
        } else {
            (1u8 << self.n) - 1
        }
    }

    fn is_connected(&self) -> bool {
        let full = self.full();
        let mut visited: u8 = 1;
        loop {
            let mut next = visited;
            let mut f = visited;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            if next == visited {
                return visited == full;
            }
            visited = next;
        }
    }

    // Wiener index, maximum vertex status and diameter; connected input.
    fn distance_stats(&self) -> (u64, u64, u32) {
        let full = self.full();
        let mut status_total = 0u64;
        let mut max_status = 0u64;
        let mut diameter = 0u32;
        for v in 0..self.n {
            let mut visited: u8 = 1 << v;
            let mut frontier = visited;
            let mut depth = 0u32;
            let mut status = 0u64;
            while visited != full {
                let mut next: u8 = 0;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u];
                }
                next &= !visited;
                debug_assert!(next != 0, "distance_stats needs a connected graph");
                depth += 1;
                status += u64::from(depth) * u64::from(next.count_ones());
                visited |= next;
                frontier = next;
            }
            status_total += status;
            max_status = max_status.max(status);
            diameter = diameter.max(depth);
        }
        debug_assert_eq!(status_total % 2, 0);
        (status_total / 2, max_status, diameter)
    }

    fn is_path(&self) -> bool {
        let mut ones = 0;
        for v in 0..self.n {
            match self.adj[v].count_ones() {
                1 => ones += 1,
                2 => {}
                _ => return false,
            }
        }
        // Degree profile of a path plus connectivity (checked by caller).
        ones == 2 || (self.n == 1 && ones == 0)
    }

    fn to_graph(self, pairs: &[(usize, usize)], mask: u64) -> Graph {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(self.n, edges).expect("bitmask edges are simple")
    }
}

/// Aggregated extrema over the `k`-connected graphs of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KScan {
    pub n: usize,
    pub k: usize,
    /// Total masks visited: `2^C(n,2)`.
    pub graphs_scanned: u64,
    pub k_connected_count: u64,
    pub max_wiener: u64,
    pub max_wiener_count: u64,
    /// Smallest bitmask among graphs attaining `max_wiener`.
    pub max_wiener_witness: u64,
    /// Every maximizer seen so far has the degree profile of a path.
    pub max_wiener_all_paths: bool,
    pub min_wiener: u64,
    pub min_wiener_count: u64,
    pub min_wiener_witness: u64,
    pub max_status: u64,
    pub max_status_witness: u64,
    pub max_diameter: u32,
    pub max_diameter_witness: u64,
}

#[derive(Clone)]
struct Accumulator {
    count: u64,
    max_wiener: u64,
    max_wiener_count: u64,
    max_wiener_witness: u64,
    max_wiener_all_paths: bool,
    min_wiener: u64,
    min_wiener_count: u64,
    min_wiener_witness: u64,
    max_status: u64,
    max_status_witness: u64,
    max_diameter: u32,
    max_diameter_witness: u64,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            count: 0,
            max_wiener: 0,
            max_wiener_count: 0,
            max_wiener_witness: 0,
            max_wiener_all_paths: true,
            min_wiener: u64::MAX,
            min_wiener_count: 0,
            min_wiener_witness: 0,
            max_status: 0,
            max_status_witness: 0,
            max_diameter: 0,
            max_diameter_witness: 0,
        }
    }

    fn record(&mut self, mask: u64, wiener: u64, max_status: u64, diameter: u32, is_path: bool) {
        self.count += 1;
        if self.count == 1 || wiener > self.max_wiener {
            self.max_wiener = wiener;
            self.max_wiener_count = 1;
            self.max_wiener_witness = mask;
            self.max_wiener_all_paths = is_path;
        } else if wiener == self.max_wiener {
            self.max_wiener_count += 1;
            self.max_wiener_all_paths &= is_path;
        }
        if wiener < self.min_wiener {
            self.min_wiener = wiener;
            self.min_wiener_count = 1;
            self.min_wiener_witness = mask;
        } else if wiener == self.min_wiener {
            self.min_wiener_count += 1;
        }
        if max_status > self.max_status || self.count == 1 {
            self.max_status = max_status;
            self.max_status_witness = mask;
        }
        if diameter > self.max_diameter || self.count == 1 {
            self.max_diameter = diameter;
            self.max_diameter_witness = mask;
        }
    }

    // Merge in chunk order: `other` comes from strictly larger masks, so
    // ties keep the smaller witness.
    fn merge(&mut self, other: &Accumulator) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = other.clone();
            return;
        }
        self.count += other.count;
        if other.max_wiener > self.max_wiener {
            self.max_wiener = other.max_wiener;
            self.max_wiener_count = other.max_wiener_count;
            self.max_wiener_witness = other.max_wiener_witness;
            self.max_wiener_all_paths = other.max_wiener_all_paths;
        } else if other.max_wiener == self.max_wiener {
            self.max_wiener_count += other.max_wiener_count;
            self.max_wiener_all_paths &= other.max_wiener_all_paths;
        }
        if other.min_wiener < self.min_wiener {
            self.min_wiener = other.min_wiener;
            self.min_wiener_count = other.min_wiener_count;
            self.min_wiener_witness = other.min_wiener_witness;
        } else if other.min_wiener == self.min_wiener {
            self.min_wiener_count += other.min_wiener_count;
        }
        if other.max_status > self.max_status {
            self.max_status = other.max_status;
            self.max_status_witness = other.max_status_witness;
        }
        if other.max_diameter > self.max_diameter {
            self.max_diameter = other.max_diameter;
            self.max_diameter_witness = other.max_diameter_witness;
        }
    }
}

/// Scan configuration; the default refuses `n = 8` and reports no progress.
#[derive(Clone, Copy, Default)]
pub struct ScanOptions<'a> {
    /// Opt in to the full 2^28-mask scan at `n = 8`.
    pub allow_order_eight: bool,
    /// Called after each finished chunk with `(chunks_done, chunks_total)`.
    pub progress: Option<&'a (dyn Fn(u64, u64) + Sync)>,
}

fn scan_chunk(
    n: usize,
    k: usize,
    pairs: &[(usize, usize)],
    masks: std::ops::Range<u64>,
) -> Accumulator {
    let mut acc = Accumulator::new();
    for mask in masks {
        let mg = MaskGraph::build(n, pairs, mask);
        if mg.min_degree() < k as u32 {
            continue;
        }
        if !mg.is_connected() {
            continue;
        }
        if k >= 2 && !is_k_connected(&mg.to_graph(pairs, mask), k) {
            continue;
        }
        let (wiener, max_status, diameter) = mg.distance_stats();
        acc.record(mask, wiener, max_status, diameter, mg.is_path());
    }
    acc
}

/// Exhaustively scans all labeled graphs of order `n` and aggregates the
/// Wiener, status and diameter extrema over the `k`-connected ones.
///
/// Requires `1 <= k < n` and `2 <= n <= 8`, with `n = 8` gated behind
/// [`ScanOptions::allow_order_eight`].
pub fn scan_k_connected(n: usize, k: usize, opts: &ScanOptions) -> Result<KScan, SearchError> {
    let cap = if opts.allow_order_eight {
        MAX_ENUM_ORDER
    } else {
        DEFAULT_SCAN_ORDER_CAP
    };
    if n < 2 || n > cap {
        return Err(SearchError::OrderOutOfRange { n, cap });
    }
    if k < 1 || k >= n {
        return Err(SearchError::InvalidConnectivity { n, k });
    }
    let pairs = edge_pair_order(n);
    let bits = pairs.len() as u32;
    let total = 1u64 << bits;
    // Fixed-width prefix chunking: big enough chunks to amortize task
    // overhead, small enough for progress reporting at n = 8.
    let chunk_bits = bits.min(14);
    let chunk_size = 1u64 << chunk_bits;
    let chunks = total >> chunk_bits;
    let done = AtomicU64::new(0);

    let partials: Vec<Accumulator> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_size;
            let acc = scan_chunk(n, k, &pairs, lo..lo + chunk_size);
            if let Some(hook) = opts.progress {
                hook(done.fetch_add(1, Ordering::Relaxed) + 1, chunks);
            }
            acc
        })
        .collect();

    let mut acc = Accumulator::new();
    for partial in &partials {
        acc.merge(partial);
    }

    Ok(KScan {
        n,
        k,
        graphs_scanned: total,
        k_connected_count: acc.count,
        max_wiener: acc.max_wiener,
        max_wiener_count: acc.max_wiener_count,
        max_wiener_witness: acc.max_wiener_witness,
        max_wiener_all_paths: acc.max_wiener_all_paths,
        min_wiener: acc.min_wiener,
        min_wiener_count: acc.min_wiener_count,
        min_wiener_witness: acc.min_wiener_witness,
        max_status: acc.max_status,
        max_status_witness: acc.max_status_witness,
        max_diameter: acc.max_diameter,
        max_diameter_witness: acc.max_diameter_witness,
    })
}

/// Maximum Wiener index over `k`-connected graphs of order `n`, with the
/// smallest-bitmask witness and the gap to the proven bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub k: usize,
    pub graphs_scanned: u64,
    pub k_connected_count: u64,
    pub max_wiener: u64,
    pub witness_edges: Vec<(usize, usize)>,
    pub bound: Rational,
    pub bound_floor: BigInt,
    pub gap: Rational,
    pub tight: bool,
}

impl ExtremalReport {
    /// Builds the report, re-verifying the witness through the exact graph
    /// path and hard-failing if the scan beat the bound.
    pub fn from_scan(scan: &KScan) -> Result<Self, SearchError> {
        let bound = wiener_bound(scan.n as u64, scan.k as u64)
            .map_err(|_| SearchError::InvalidConnectivity { n: scan.n, k: scan.k })?;
        let witness = graph_from_bitmask(scan.n, scan.max_wiener_witness)?;
        let witness_edges = witness.edges();
        assert_eq!(
            witness.wiener().expect("witness is connected"),
            scan.max_wiener,
            "witness must attain the scanned maximum"
        );
        assert!(
            is_k_connected(&witness, scan.k),
            "witness must be k-connected"
        );
        let observed = rational::from_u64(scan.max_wiener);
        if observed > bound {
            return Err(SearchError::BoundViolation {
                quantity: "wiener",
                n: scan.n,
                k: scan.k,
                observed: scan.max_wiener.to_string(),
                bound: rational::fraction_string(&bound),
                witness: witness_edges,
            });
        }
        let gap = bound.clone() - observed;
        Ok(ExtremalReport {
            n: scan.n,
            k: scan.k,
            graphs_scanned: scan.graphs_scanned,
            k_connected_count: scan.k_connected_count,
            max_wiener: scan.max_wiener,
            witness_edges,
            bound_floor: rational::floor_int(&bound),
            tight: gap == rational::from_u64(0),
            bound,
            gap,
        })
    }
}

/// Maximum diameter over `k`-connected graphs of order `n` versus the
/// proven bound `floor((n + k - 2) / k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiameterBoundReport {
    pub n: usize,
    pub k: usize,
    pub k_connected_count: u64,
    pub max_diameter: u32,
    pub bound: u64,
    pub witness_edges: Vec<(usize, usize)>,
    pub attained: bool,
}

impl DiameterBoundReport {
    pub fn from_scan(scan: &KScan) -> Result<Self, SearchError> {
        let bound = diameter_bound(scan.n as u64, scan.k as u64)
            .map_err(|_| SearchError::InvalidConnectivity { n: scan.n, k: scan.k })?;
        let witness_edges = graph_from_bitmask(scan.n, scan.max_diameter_witness)?.edges();
        if u64::from(scan.max_diameter) > bound {
            return Err(SearchError::BoundViolation {
                quantity: "diameter",
                n: scan.n,
                k: scan.k,
                observed: scan.max_diameter.to_string(),
                bound: bound.to_string(),
                witness: witness_edges,
            });
        }
        Ok(DiameterBoundReport {
            n: scan.n,
            k: scan.k,
            k_connected_count: scan.k_connected_count,
            max_diameter: scan.max_diameter,
            bound,
            witness_edges,
            attained: u64::from(scan.max_diameter) == bound,
        })
    }
}

/// Maximum vertex status over `k`-connected graphs of order `n` versus the
/// proven bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusBoundReport {
    pub n: usize,
    pub k: usize,
    pub k_connected_count: u64,
    pub max_status: u64,
    pub bound: Rational,
    pub witness_edges: Vec<(usize, usize)>,
    pub attained: bool,
}

impl StatusBoundReport {
    pub fn from_scan(scan: &KScan) -> Result<Self, SearchError> {
        let bound = status_bound(scan.n as u64, scan.k as u64)
            .map_err(|_| SearchError::InvalidConnectivity { n: scan.n, k: scan.k })?;
        let witness_edges = graph_from_bitmask(scan.n, scan.max_status_witness)?.edges();
        let observed = rational::from_u64(scan.max_status);
        if observed > bound {
            return Err(SearchError::BoundViolation {
                quantity: "status",
                n: scan.n,
                k: scan.k,
                observed: scan.max_status.to_string(),
                bound: rational::fraction_string(&bound),
                witness: witness_edges,
            });
        }
        Ok(StatusBoundReport {
            n: scan.n,
            k: scan.k,
            k_connected_count: scan.k_connected_count,
            max_status: scan.max_status,
            attained: observed == bound,
            bound,
            witness_edges,
        })
    }
}

/// Extremes of the Wiener index over all connected graphs of order `n`:
/// the minimum must be attained exactly by the complete graph and the
/// maximum exactly by path labelings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntringerReport {
    pub n: usize,
    pub connected_count: u64,
    pub min_wiener: u64,
    pub min_count: u64,
    pub min_is_complete: bool,
    pub max_wiener: u64,
    pub max_count: u64,
    pub max_all_paths: bool,
    pub expected_min: u64,
    pub expected_max: u64,
    pub expected_path_count: u64,
    pub ok: bool,
}

impl EntringerReport {
    pub fn from_scan(scan: &KScan) -> Self {
        assert_eq!(scan.k, 1, "Entringer extremes range over connected graphs");
        let n = scan.n as u64;
        let expected_min = n * (n - 1) / 2;
        let expected_max = n * (n * n - 1) / 6;
        let expected_path_count = (1..=n).product::<u64>() / 2;
        let bits = scan.n * (scan.n - 1) / 2;
        let full_mask = (1u64 << bits) - 1;
        let min_is_complete = scan.min_wiener_count == 1 && scan.min_wiener_witness == full_mask;
        let ok = scan.min_wiener == expected_min
            && min_is_complete
            && scan.max_wiener == expected_max
            && scan.max_wiener_all_paths
            && scan.max_wiener_count == expected_path_count;
        EntringerReport {
            n: scan.n,
            connected_count: scan.k_connected_count,
            min_wiener: scan.min_wiener,
            min_count: scan.min_wiener_count,
            min_is_complete,
            max_wiener: scan.max_wiener,
            max_count: scan.max_wiener_count,
            max_all_paths: scan.max_wiener_all_paths,
            expected_min,
            expected_max,
            expected_path_count,
            ok,
        }
    }
}

/// All three bound checks for `(n, k)` from one shared scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsVerification {
    pub extremal: ExtremalReport,
    pub diameter: DiameterBoundReport,
    pub status: StatusBoundReport,
}

/// Runs the exhaustive scan once and checks the Wiener, status and
/// diameter bounds against it. Any violation comes back as
/// [`SearchError::BoundViolation`].
pub fn verify_bounds(n: usize, k: usize, opts: &ScanOptions) -> Result<BoundsVerification, SearchError> {
    require_bound_domain(n, k)?;
    let scan = scan_k_connected(n, k, opts)?;
    Ok(BoundsVerification {
        extremal: ExtremalReport::from_scan(&scan)?,
        diameter: DiameterBoundReport::from_scan(&scan)?,
        status: StatusBoundReport::from_scan(&scan)?,
    })
}

fn require_bound_domain(n: usize, k: usize) -> Result<(), SearchError> {
    if k >= 1 && n > k + 1 {
        Ok(())
    } else {
        Err(SearchError::InvalidConnectivity { n, k })
    }
}

/// Scans order `n` and reports the extremal Wiener index over
/// `k`-connected graphs, `n - 1 > k >= 1`.
pub fn extremal_wiener(n: usize, k: usize, opts: &ScanOptions) -> Result<ExtremalReport, SearchError> {
    require_bound_domain(n, k)?;
    ExtremalReport::from_scan(&scan_k_connected(n, k, opts)?)
}

/// Scans order `n` and compares the maximum diameter of `k`-connected
/// graphs against the proven bound.
pub fn verify_diameter_bound(
    n: usize,
    k: usize,
    opts: &ScanOptions,
) -> Result<DiameterBoundReport, SearchError> {
    require_bound_domain(n, k)?;
    DiameterBoundReport::from_scan(&scan_k_connected(n, k, opts)?)
}

/// Scans order `n` and compares the maximum vertex status of
/// `k`-connected graphs against the proven bound.
pub fn verify_status_bound(
    n: usize,
    k: usize,
    opts: &ScanOptions,
) -> Result<StatusBoundReport, SearchError> {
    require_bound_domain(n, k)?;
    StatusBoundReport::from_scan(&scan_k_connected(n, k, opts)?)
}

/// Scans order `n`, `2 <= n <= cap`, and checks the Wiener extremes over
/// connected graphs: minimum only at the complete graph, maximum exactly
/// at path labelings.
pub fn verify_entringer(n: usize, opts: &ScanOptions) -> Result<EntringerReport, SearchError> {
    if n < 2 {
        return Err(SearchError::OrderOutOfRange {
            n,
            cap: MAX_ENUM_ORDER,
        });
    }
    Ok(EntringerReport::from_scan(&scan_k_connected(n, 1, opts)?))
}

//! Closed forms for the diameter, vertex statuses and Wiener index of
//! `H_{k,n}`, the matching upper bounds for arbitrary `k`-connected graphs
//! of order `n`, and a sweep that verifies every closed form against
//! BFS-computed values.
//!
//! All arithmetic is exact: floors are integer divisions of non-negative
//! operands and everything else lives in [`Rational`].

use std::error::Error;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::graph::Graph;
use crate::harary::harary;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainError {
    /// Closed forms need `n - 1 > k >= 2`; the bounds need
    /// `n - 1 >= k >= 1` (with `k = n - 1` being the complete-graph
    /// boundary).
    InvalidParameters { n: u64, k: u64, needs: &'static str },
    /// The mean-distance bound is only stated for even `k`.
    OddConnectivity { k: u64 },
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainError::InvalidParameters { n, k, needs } => {
                write!(f, "parameters n = {n}, k = {k} outside domain ({needs})")
            }
            DomainError::OddConnectivity { k } => {
                write!(f, "mean-distance bound requires even k, got k = {k}")
            }
        }
    }
}

impl Error for DomainError {}

/// Size regime that selects which closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `k` even, any `n`.
    Even,
    /// `k` odd, `n` even, `k + 1 < n <= 3k - 1` (diameter 2).
    OddEvenSmall,
    /// `k` odd, `n` even, `n >= 3k + 1`.
    OddEvenLarge,
    /// both odd, `k + 1 < n <= 3k - 2` (diameter 2).
    OddOddSmall,
    /// both odd, `n = 3k` (diameter 3).
    OddOddThreeK,
    /// both odd, `n >= 3k + 2`.
    OddOddLarge,
}

impl Regime {
    pub fn label(self) -> &'static str {
        match self {
            Regime::Even => "Even",
            Regime::OddEvenSmall => "OddEven-small",
            Regime::OddEvenLarge => "OddEven-large",
            Regime::OddOddSmall => "OddOdd-small",
            Regime::OddOddThreeK => "OddOdd-3k",
            Regime::OddOddLarge => "OddOdd-large",
        }
    }
}

/// Exact diameter, statuses and Wiener index of `H_{k,n}`.
///
/// `status_z` is present only when both `k` and `n` are odd; it belongs to
/// the single degree-`(k+1)` vertex `(n-1)/2`. All status and Wiener values
/// evaluate to integers (they count distances), which the verification
/// sweep checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HararyClosedForm {
    pub k: u64,
    pub n: u64,
    pub regime: Regime,
    pub diameter: u64,
    pub status_x: Rational,
    pub status_z: Option<Rational>,
    pub wiener: Rational,
}

fn require(cond: bool, n: u64, k: u64, needs: &'static str) -> Result<(), DomainError> {
    if cond {
        Ok(())
    } else {
        Err(DomainError::InvalidParameters { n, k, needs })
    }
}

/// Evaluates the closed form for `H_{k,n}`, `n - 1 > k >= 2`.
///
/// The complete-graph case `n = k + 1` is excluded. Dispatch is on the
/// parity of `k` and `n` and on the size regime of `n` relative to `3k`;
/// the parity combinations make the skipped regimes (`n = 3k` with `n`
/// even, `n = 3k +- 1` with `n` odd) impossible.
pub fn harary_closed_form(k: u64, n: u64) -> Result<HararyClosedForm, DomainError> {
    require(k >= 2 && n > k + 1, n, k, "n - 1 > k >= 2")?;
    let form = if k % 2 == 0 {
        let d = (n + k - 2) / k;
        let layer_term = 2 * n + k - 2 - k * d;
        HararyClosedForm {
            k,
            n,
            regime: Regime::Even,
            diameter: d,
            status_x: rational::ratio(d * layer_term, 2),
            status_z: None,
            wiener: rational::ratio(n * d * layer_term, 4),
        }
    } else if n % 2 == 0 {
        debug_assert!(n != 3 * k, "k odd and n even exclude n = 3k");
        if n <= 3 * k - 1 {
            HararyClosedForm {
                k,
                n,
                regime: Regime::OddEvenSmall,
                diameter: 2,
                status_x: rational::from_u64(2 * n - k - 2),
                status_z: None,
                wiener: rational::ratio(n * (2 * n - k - 2), 2),
            }
        } else {
            let d = (n - k - 3) / (2 * (k - 1)) + 2;
            let layer_term = 2 * n + 4 * k - 8 - 2 * (k - 1) * d;
            HararyClosedForm {
                k,
                n,
                regime: Regime::OddEvenLarge,
                diameter: d,
                status_x: rational::ratio(d * layer_term, 2) - rational::from_u64(k - 2),
                status_z: None,
                wiener: rational::ratio(n * d * layer_term, 4)
                    - rational::ratio(n * (k - 2), 2),
            }
        }
    } else {
        debug_assert!(
            n != 3 * k - 1 && n != 3 * k + 1,
            "k and n both odd exclude n = 3k +- 1"
        );
        if n <= 3 * k - 2 {
            HararyClosedForm {
                k,
                n,
                regime: Regime::OddOddSmall,
                diameter: 2,
                status_x: rational::from_u64(2 * n - k - 2),
                status_z: Some(rational::from_u64(2 * n - k - 3)),
                wiener: rational::ratio(n * (2 * n - k - 2), 2) - rational::ratio(1, 2),
            }
        } else if n == 3 * k {
            HararyClosedForm {
                k,
                n,
                regime: Regime::OddOddThreeK,
                diameter: 3,
                status_x: rational::from_u64(2 * n - k - 1),
                status_z: Some(rational::from_u64(2 * n - k - 3)),
                wiener: rational::ratio(n * (2 * n - k - 1), 2) - rational::from_u64(1),
            }
        } else {
            let d = (n - k - 2) / (2 * (k - 1)) + 2;
            let layer_term = 2 * n + 4 * k - 8 - 2 * (k - 1) * d;
            // The z vertex sees one extra neighbor at distance 1, so its
            // layer term is smaller by 2 and the correction uses k - 3.
            HararyClosedForm {
                k,
                n,
                regime: Regime::OddOddLarge,
                diameter: d,
                status_x: rational::ratio(d * layer_term, 2) - rational::from_u64(k - 2),
                status_z: Some(
                    rational::ratio(d * (layer_term - 2), 2) - rational::from_u64(k - 3),
                ),
                wiener: rational::ratio(n * d * layer_term, 4)
                    - rational::ratio(n * (k - 2) + d - 1, 2),
            }
        }
    };
    Ok(form)
}

fn check_bound_domain(n: u64, k: u64) -> Result<(), DomainError> {
    require(k >= 1 && n >= k + 1 && n >= 2, n, k, "n - 1 >= k >= 1")
}

/// Largest possible diameter of a `k`-connected graph of order `n`:
/// `floor((n + k - 2) / k)`.
///
/// Sharp for `k = 1` (a path) and even `k >= 2` (`H_{k,n}`). The boundary
/// `k = n - 1` evaluates to 1, the diameter of the complete graph.
pub fn diameter_bound(n: u64, k: u64) -> Result<u64, DomainError> {
    check_bound_domain(n, k)?;
    Ok((n + k - 2) / k)
}

/// Largest possible vertex status in a `k`-connected graph of order `n`.
///
/// Sharp for `k = 1` (an end vertex of a path) and even `k >= 2`
/// (any vertex of `H_{k,n}`).
pub fn status_bound(n: u64, k: u64) -> Result<Rational, DomainError> {
    let d = diameter_bound(n, k)?;
    Ok(rational::ratio(d * (2 * n + k - 2 - k * d), 2))
}

/// Upper bound on the Wiener index of a `k`-connected graph of order `n`;
/// may be non-integral, so callers floor it for integer certificates.
///
/// Sharp for even `k >= 2`, attained by `H_{k,n}`. At the boundary
/// `k = n - 1` the formula evaluates to `n(n-1)/2`, the Wiener index of
/// the complete graph.
pub fn wiener_bound(n: u64, k: u64) -> Result<Rational, DomainError> {
    let d = diameter_bound(n, k)?;
    Ok(rational::ratio(n * d * (2 * n + k - 2 - k * d), 4))
}

/// Upper bound on the mean distance of a `k`-connected graph for even `k`:
/// `floor((n + k - 1) / k) * (n - 1 - (k/2) * floor((n - 1) / k)) / (n - 1)`.
pub fn mean_distance_bound(n: u64, k: u64) -> Result<Rational, DomainError> {
    require(k >= 2 && n > k + 1, n, k, "n - 1 > k >= 2")?;
    if k % 2 != 0 {
        return Err(DomainError::OddConnectivity { k });
    }
    let f = (n + k - 1) / k;
    let q = (n - 1) / k;
    Ok(rational::ratio(f * (n - 1 - (k / 2) * q), n - 1))
}

/// The three bounds (plus the mean-distance bound when `k` is even) for one
/// parameter pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub k: u64,
    pub diameter_bound: u64,
    pub status_bound: Rational,
    pub wiener_bound: Rational,
    pub wiener_bound_floor: BigInt,
    pub mean_distance_bound: Option<Rational>,
    /// `k = n - 1`: the formulas coincide with the complete-graph values.
    pub boundary_complete: bool,
}

pub fn bound_report(n: u64, k: u64) -> Result<BoundReport, DomainError> {
    let w = wiener_bound(n, k)?;
    let mean = if k % 2 == 0 && n > k + 1 {
        Some(mean_distance_bound(n, k)?)
    } else {
        None
    };
    Ok(BoundReport {
        n,
        k,
        diameter_bound: diameter_bound(n, k)?,
        status_bound: status_bound(n, k)?,
        wiener_bound_floor: rational::floor_int(&w),
        wiener_bound: w,
        mean_distance_bound: mean,
        boundary_complete: k + 1 == n,
    })
}

/// Closed form next to the BFS-computed truth for one `(k, n)` pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaComparison {
    pub k: u64,
    pub n: u64,
    pub regime: Regime,
    pub expected_diameter: u64,
    pub expected_status_x: Rational,
    pub expected_status_z: Option<Rational>,
    pub expected_wiener: Rational,
    pub observed_diameter: u64,
    pub observed_status_min: u64,
    pub observed_status_max: u64,
    pub observed_status_z: Option<u64>,
    pub observed_wiener: u64,
    pub mismatch: Option<String>,
}

/// Outcome of a formula-vs-BFS sweep; `mismatches` is expected to be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaVerification {
    pub pairs_checked: usize,
    pub mismatches: Vec<FormulaComparison>,
}

fn compare_pair(k: u64, n: u64) -> FormulaComparison {
    let form = harary_closed_form(k, n).expect("sweep stays inside the domain");
    let g: Graph = harary(k as usize, n as usize).expect("sweep stays inside the domain");
    let observed_diameter = u64::from(g.diameter().expect("H_{k,n} is connected"));
    let statuses: Vec<u64> = (0..g.n())
        .map(|v| g.status(v).expect("H_{k,n} is connected"))
        .collect();
    let observed_wiener = g.wiener().expect("H_{k,n} is connected");
    let z_vertex = (n as usize - 1) / 2;
    let observed_status_z = form.status_z.as_ref().map(|_| statuses[z_vertex]);

    let mut problems = Vec::new();
    if observed_diameter != form.diameter {
        problems.push(format!(
            "diameter: formula {} vs BFS {observed_diameter}",
            form.diameter
        ));
    }
    if rational::from_u64(observed_wiener) != form.wiener {
        problems.push(format!(
            "wiener: formula {} vs BFS {observed_wiener}",
            form.wiener
        ));
    }
    match &form.status_z {
        None => {
            for (v, &s) in statuses.iter().enumerate() {
                if rational::from_u64(s) != form.status_x {
                    problems.push(format!(
                        "status of vertex {v}: formula {} vs BFS {s}",
                        form.status_x
                    ));
                    break;
                }
            }
        }
        Some(expected_z) => {
            if rational::from_u64(statuses[z_vertex]) != *expected_z {
                problems.push(format!(
                    "status of z vertex {z_vertex}: formula {expected_z} vs BFS {}",
                    statuses[z_vertex]
                ));
            }
            for (v, &s) in statuses.iter().enumerate() {
                if v != z_vertex && rational::from_u64(s) != form.status_x {
                    problems.push(format!(
                        "status of vertex {v}: formula {} vs BFS {s}",
                        form.status_x
                    ));
                    break;
                }
            }
        }
    }

    FormulaComparison {
        k,
        n,
        regime: form.regime,
        expected_diameter: form.diameter,
        expected_status_x: form.status_x,
        expected_status_z: form.status_z,
        expected_wiener: form.wiener,
        observed_diameter,
        observed_status_min: statuses.iter().copied().min().unwrap_or(0),
        observed_status_max: statuses.iter().copied().max().unwrap_or(0),
        observed_status_z,
        observed_wiener,
        mismatch: if problems.is_empty() {
            None
        } else {
            Some(problems.join("; "))
        },
    }
}

/// Compares every closed form against BFS-computed values over
/// `k in k_range`, `n in n_range`, restricted to `n - 1 > k >= 2`.
///
/// Pairs are checked in parallel; the report lists mismatches sorted by
/// `(k, n)` regardless of worker count.
pub fn verify_closed_forms(
    k_range: RangeInclusive<u64>,
    n_range: RangeInclusive<u64>,
) -> FormulaVerification {
    let mut pairs = Vec::new();
    for k in k_range.clone() {
        if k < 2 {
            continue;
        }
        for n in n_range.clone() {
            if n > k + 1 {
                pairs.push((k, n));
            }
        }
    }
    let comparisons: Vec<FormulaComparison> = pairs
        .par_iter()
        .map(|&(k, n)| compare_pair(k, n))
        .collect();
    FormulaVerification {
        pairs_checked: comparisons.len(),
        mismatches: comparisons
            .into_iter()
            .filter(|c| c.mismatch.is_some())
            .collect(),
    }
}

//! Exact distance invariants for simple undirected graphs.
//!
//! The crate computes Wiener indices, vertex statuses, eccentricities and
//! vertex connectivity with integer arithmetic only, builds Harary graphs
//! `H_{k,n}`, evaluates the closed forms for their diameter, statuses and
//! Wiener index, and evaluates sharp upper bounds on the diameter, status
//! and Wiener index of a `k`-connected graph of order `n`. An exhaustive
//! search over all labeled graphs of small order independently verifies the
//! bounds and reports extremal witnesses.
//!
//! Modules:
//! - [`graph`]: adjacency-set graphs and BFS-based distance invariants
//! - [`connectivity`]: vertex connectivity via vertex-capacity max-flow
//! - [`harary`](mod@harary): the `H_{k,n}` construction for all parity cases
//! - [`rational`]: exact rational arithmetic used by the bound formulas
//! - [`closed_form`]: closed forms and upper bounds, plus a formula-vs-BFS
//!   verification sweep
//! - [`search`]: exhaustive enumeration of labeled graphs with deterministic
//!   parallel reduction

#![forbid(unsafe_code)]

pub mod closed_form;
pub mod connectivity;
pub mod graph;
pub mod harary;
pub mod rational;
pub mod search;

pub use closed_form::{
    bound_report, diameter_bound, harary_closed_form, mean_distance_bound, status_bound,
    verify_closed_forms, wiener_bound, BoundReport, DomainError, FormulaComparison,
    FormulaVerification, HararyClosedForm, Regime,
};
pub use connectivity::{
    is_k_connected, local_connectivity, vertex_connectivity, ConnectivityError, VertexCut,
};
pub use graph::{DistanceRow, Graph, GraphError, LayerProfile, INFINITY};
pub use harary::{harary, HararyError, HararySpec, ParityCase};
pub use rational::Rational;
pub use search::{
    enumerate_graphs, extremal_wiener, graph_from_bitmask, scan_k_connected, verify_bounds,
    verify_diameter_bound, verify_entringer, verify_status_bound, BoundsVerification,
    DiameterBoundReport, EntringerReport, ExtremalReport, KScan, ScanOptions, SearchError,
    StatusBoundReport, MAX_ENUM_ORDER,
};

//! Graph serialization and report plumbing for the `wiener` binary:
//! the edge-list text format, the graph6 short form, and the deterministic
//! report envelope.

#![forbid(unsafe_code)]

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use edgelist::{format_edge_list, parse_edge_list, EdgeListError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use report::{json_string, rational_value, ReportEnvelope, ARTIFACT_VERSION};

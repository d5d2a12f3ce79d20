//! Small-graph enumeration, theorem cross-validation and witness search.

pub mod enumerate;
pub mod generators;
pub mod search;
pub mod theorems;

pub use enumerate::{canonical_code, corpus, enumerate_connected_graphs, MAX_ENUM_N};
pub use search::{find_counterexample, find_counterexample_with, PredicateId, SearchConfig, Witness};
pub use theorems::{verify_theorem, verify_theorem_with, Kind, TheoremId, TheoremReport, VerifyConfig};

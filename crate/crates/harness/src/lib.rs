//! Census verification for matching covered cubic graphs: per-graph
//! analysis, a registry of property checks, a parallel runner and the
//! bundled census of connected cubic graphs up to 16 vertices.

pub mod analysis;
pub mod census;
pub mod checks;
pub mod error;
pub mod facts;
pub mod report;
pub mod run;

pub use analysis::{analyze, max_removable_matching, AnalysisReport};
pub use checks::{select, Check, Outcome, REGISTRY};
pub use error::{HarnessError, Result};
pub use report::{ListedGraph, Summary, VerificationReport, ViolationRecord};
pub use run::{analyze_records, parse_census, run_checks, RunOptions};

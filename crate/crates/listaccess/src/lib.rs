//! Self-organizing list search under positional cost models.
//!
//! An unsorted linear list serves a sequence of element requests. Accessing
//! the element at position `i` costs `i` (full cost model) or `i - 1`
//! comparisons (partial cost model), and the list may be reorganized between
//! requests to cut the cost of later accesses. This crate implements the
//! move-to-front policy (`MTF`), a lookahead-gated variant (`IMTF`) that only
//! promotes elements about to be requested again, a static baseline, and an
//! exhaustive move/stay oracle for small instances. On top of the policies sit
//! seeded workload generators and an experiment runner that compares policy
//! costs and emits CSV tables and SVG charts.
//!
//! ```
//! use listaccess::{run_mtf, CostModel, ListConfiguration, RequestSequence};
//!
//! let list = ListConfiguration::from_chars("123").unwrap();
//! let seq = RequestSequence::from_chars("23132");
//! let report = run_mtf(&list, &seq, CostModel::Full).unwrap();
//! assert_eq!(report.total_cost, 13);
//! ```

pub mod algo;
pub mod chart;
pub mod datagen;
pub mod experiment;
pub mod list;
pub mod parse;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use algo::{
    gain, lookahead_hit, run_bruteforce_oracle, run_imtf, run_mtf, run_static, AlgorithmId,
    LookaheadWindow, DEFAULT_ORACLE_LIMIT,
};
pub use datagen::{build_list, gen_sequence, locality_stats, Base, Family, GenSpec, LocalityStats};
pub use list::{CostModel, CostReport, ListConfiguration, RequestSequence, Symbol};

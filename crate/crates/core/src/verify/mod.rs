//! Check suites and reports.
//!
//! Exact checks run over the rationals and report either zero or the first
//! offending term. Numeric checks compare generating-polynomial slices
//! coefficient by coefficient, relative to `ζ(l)`.

pub mod config;
pub mod exact_suite;
pub mod fixtures;
pub mod numeric;
pub mod report;
pub mod run;

pub use config::{parse_weights, Config, Suite};
pub use exact_suite::check_exact_suite;
pub use numeric::{check_corollary, check_cyclic_pointwise, check_series_identity, check_theorem, NumCtx, SeriesId};
pub use report::{CheckKind, CheckResult, ConfigSnapshot, Report, Status, Summary};
pub use run::run_all;

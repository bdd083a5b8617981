//! Batch verification of every identity over presets, user-supplied
//! parameter sets and seeded random parameter sets.

mod config;
mod report;
mod suite;

pub use config::{Category, NumericWindows, SuiteConfig};
pub use report::{CategoryStats, SignDiagnostic, VerificationReport};
pub use suite::run_suite;

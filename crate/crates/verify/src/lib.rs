//! A battery of named numerical checks over a grid of `g` values.
//!
//! Every check samples points deterministically from the seed, measures a
//! residual per sample and keeps the worst one. [`run_all`] runs the whole
//! registry concurrently and returns reports sorted by name.

mod checks;
mod claim;
mod oracle;
mod report;
mod runner;
mod sampling;

pub use checks::registry;
pub use claim::Claim;
pub use report::{summary_table, to_json, Family, VerificationReport, WorstInput};
pub use runner::{run_all, run_checks, CheckSpec, Ctx, Scope, DEFAULT_GRID};
pub use sampling::sample_directions;

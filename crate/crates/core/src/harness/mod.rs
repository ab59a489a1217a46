//! End-to-end verification of the degree bounds for one group, the JSON
//! report it produces, and directory sweeps.

mod cli;
mod input;
mod report;
mod sweep;
mod verify;

pub use cli::run_cli;
pub use input::InputSpec;
pub use report::{BoundsReport, Check, DegreeValue, Record, Status, SyzygyReport, Timing};
pub use sweep::{sweep, SweepRow, SweepSummary};
pub use verify::{verify_bounds, VerifyOptions};

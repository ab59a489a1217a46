//! Crate error type and the process exit codes each variant maps to.

use std::time::{Duration, Instant};

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad JSON, unknown variable, mismatched ring sizes.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("modular case not supported: characteristic {characteristic} divides |G| = {order}")]
    Modular { characteristic: u64, order: usize },

    #[error("group too large or infinite: closure exceeded {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("wall-clock budget of {budget:?} exhausted during {stage}")]
    BudgetExhausted { budget: Duration, stage: String },

    /// A proven degree bound failed; this can only be an implementation bug.
    #[error("bound violation (implementation bug): {0}")]
    BoundViolation(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code, following the sysexits conventions used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 64,
            Error::Modular { .. }
            | Error::GroupTooLarge { .. }
            | Error::Unsupported(_)
            | Error::BudgetExhausted { .. } => 65,
            Error::BoundViolation(_) | Error::Internal(_) => 70,
        }
    }
}

/// Optional wall-clock deadline shared by long-running computations.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    limit: Option<(Instant, Duration)>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { limit: None }
    }

    pub fn seconds(secs: f64) -> Self {
        let budget = Duration::from_secs_f64(secs.max(0.0));
        Self { limit: Some((Instant::now() + budget, budget)) }
    }

    pub fn check(&self, stage: &str) -> Result<()> {
        match self.limit {
            Some((deadline, budget)) if Instant::now() > deadline => {
                Err(Error::BudgetExhausted { budget, stage: stage.to_string() })
            }
            _ => Ok(()),
        }
    }
}

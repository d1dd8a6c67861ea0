use thiserror::Error;

use crate::geometry::Ball;

/// Errors raised by the solvers, testers and geometric routines.
#[derive(Debug, Clone, Error)]
pub enum MebError {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("dimension mismatch: expected dim={expected}, got dim={got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("points must have dimension >= 1")]
    ZeroDimension,

    #[error("non-finite coordinate at position {position}")]
    NonFinite { position: usize },

    #[error("need at least {required} points, got {got}")]
    TooFewPoints { required: usize, got: usize },

    #[error("affinely dependent input: points {indices:?}")]
    Degenerate { indices: Vec<usize> },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid convex combination: {0}")]
    InvalidCombination(String),

    #[error("iteration cap {cap} exceeded (possible finite-precision loop); best enclosing radius {}", best.radius)]
    IterationCap { cap: u64, best: Ball },

    #[error("no convergence after {iterations} iterations; duality gap {gap:e}")]
    NotConverged { iterations: usize, gap: f64 },

    #[error("{what}: enumeration needs {required} units, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: u128,
        budget: u128,
    },
}

impl MebError {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        MebError::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for errors caused by a computation guard or convergence failure
    /// rather than by malformed input.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            MebError::IterationCap { .. }
                | MebError::NotConverged { .. }
                | MebError::BudgetExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, MebError>;

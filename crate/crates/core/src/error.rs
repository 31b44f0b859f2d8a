//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-domain input supplied by the caller.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Division by zero or another undefined field operation.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// Evaluation hit a pole of a rational function.
    #[error("evaluation error: {0}")]
    Evaluation(String),
    /// An internal invariant failed; this signals a bug, not bad input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

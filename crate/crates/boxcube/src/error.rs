//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by representation constructors, converters, and parsers.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated (bad vertex id, malformed
    /// interval, mismatched sizes, and so on).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An instance was too large for a brute-force routine.
    #[error("size limit exceeded: n = {n} is over the configured limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    /// A document could not be parsed or failed validation.
    #[error("parse error: {0}")]
    Parse(String),

    /// An underlying filesystem operation failed.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

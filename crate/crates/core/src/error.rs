//! Error taxonomy shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input text (bad `.trn` data, bad bit strings).
    #[error("format error: {0}")]
    Format(String),
    /// Input exceeds a hard size cap (vertex count, matrix order, search space).
    #[error("capacity error: {0}")]
    Capacity(String),
    /// An argument violates a precondition (bad vertex, wrong parity, ...).
    #[error("argument error: {0}")]
    Argument(String),
    /// The input lacks structure an operation requires (e.g. a non-transitive set
    /// where a transitive one is needed).
    #[error("structure error: {0}")]
    Structure(String),
    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

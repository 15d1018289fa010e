use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is outside the operation's contract (bad parameter, foreign vertex, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configured resource limit was exceeded.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("ideals live over different variable sets")]
    AmbientMismatch,

    #[error("exponent overflow")]
    Overflow,
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

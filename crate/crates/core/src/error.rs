use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    /// Explicit materialization refused; the implicit (index-permutation) route must be used.
    #[error("two-copy dimension {dim} exceeds the materialization limit {limit}; use the implicit evaluation instead")]
    TooLarge { dim: usize, limit: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("bound value is not monotone in the parameter on [{lo}, {hi}]")]
    NonMonotone { lo: f64, hi: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

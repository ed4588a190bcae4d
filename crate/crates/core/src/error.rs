use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-side precondition was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The requested product or parameter range is outside what is implemented.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// An enumeration would exceed the configured budget.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("not divisible: {0}")]
    Divisibility(String),

    /// An internal invariant failed; this is a bug, never an input problem.
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}

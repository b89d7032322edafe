use thiserror::Error;

/// Errors raised by the klein-core operations.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The bitmask representation cannot hold this many variables.
    #[error("capacity exceeded: n = {n} but at most {max} is supported")]
    Capacity { n: usize, max: usize },

    /// Two operands live in different ambient dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An exhaustive search would exceed its size guard.
    #[error("refused: {what}: size {count} exceeds the guard {limit}")]
    Infeasible {
        what: String,
        count: u128,
        limit: u128,
    },

    /// A length vector admits a degenerate (collinear) configuration.
    #[error("length vector is not generic: subset {subset:?} balances its complement")]
    NonGeneric { subset: Vec<usize> },

    #[error("numeric error: {0}")]
    Numeric(String),

    /// An internal identity that must hold did not.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

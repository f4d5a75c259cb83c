use thiserror::Error;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    BadInput,
    ModelInconsistency,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("intersection matrix is not negative definite")]
    NotNegativeDefinite,

    #[error("graph is not star-shaped: {0}")]
    NotStarShaped(String),

    #[error("value out of supported range: {0}")]
    Overflow(String),

    #[error("h0 value {value} for D_{n} violates the degree bounds ({reason})")]
    OutOfBounds { n: u64, value: i64, reason: String },

    #[error("negative coefficient {value} at t^{degree} in {context}")]
    NegativeCoefficient {
        degree: usize,
        value: String,
        context: String,
    },

    #[error("inconsistent model: {0}")]
    Inconsistent(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::InvalidInput(_)
            | Error::NotATree(_)
            | Error::NotNegativeDefinite
            | Error::NotStarShaped(_)
            | Error::Overflow(_)
            | Error::OutOfBounds { .. } => ErrorKind::BadInput,
            Error::NegativeCoefficient { .. } | Error::Inconsistent(_) => {
                ErrorKind::ModelInconsistency
            }
            Error::Internal(_) => ErrorKind::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

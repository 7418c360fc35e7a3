use thiserror::Error;

use crate::quotients::CongruenceVerdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration or construction would exceed the configured bound.
    #[error("size bound exceeded: {what} ({actual} > {limit})")]
    SizeBound {
        what: String,
        actual: usize,
        limit: usize,
    },

    #[error("kernel data is not a congruence for system {system}")]
    NotACongruence {
        system: crate::System,
        verdict: Box<CongruenceVerdict>,
    },

    #[error("not an equivalence relation: {0}")]
    NotAnEquivalenceRelation(String),

    #[error("not fully faithful: {0}")]
    NotFullyFaithful(String),

    #[error("not a fully faithful equivalence relation: {0}")]
    NotFFEquivalenceRelation(String),

    /// The level-n Segal comparison of a computed quotient was not invertible.
    #[error("Segal map at level {level} is not invertible: {detail}")]
    SegalFailure { level: usize, detail: String },

    #[error("invalid input at {path}: {message}")]
    InvalidInput { path: String, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidInput {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn size(what: impl Into<String>, actual: usize, limit: usize) -> Self {
        Error::SizeBound {
            what: what.into(),
            actual,
            limit,
        }
    }
}

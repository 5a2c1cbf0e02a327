//! Error type shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {detail}")]
    DimensionMismatch { detail: String },

    #[error("algebra mismatch: operands live over different presentations")]
    AlgebraMismatch,

    #[error("not verified finite-dimensional under cap {cap}: irreducible path of length {length} survives reduction")]
    NotFiniteDimensional { cap: usize, length: usize },

    #[error("presentation rejected, supply pre-reduced relations: {detail}")]
    NonConfluentPresentation { detail: String },

    #[error("invalid presentation: {detail}")]
    InvalidPresentation { detail: String },

    #[error("rejected input: {detail}")]
    RejectedInput { detail: String },

    #[error("invariant violation: {detail}")]
    InvariantViolation { detail: String },

    #[error("iso-test inconclusive between {left} and {right}: bounded search exhausted with matching hom profile")]
    IsoInconclusive { left: String, right: String },

    #[error("split search exhausted on a module of dimension vector {dims:?}")]
    SplitSearchExhausted { dims: Vec<usize> },

    #[error("summand outside window: {detail}")]
    SummandOutsideWindow { detail: String },

    #[error("mutation leaves window at position {position}")]
    MutationLeavesWindow { position: usize },

    #[error("no preimage in window: {detail}")]
    NoPreimageInWindow { detail: String },

    #[error("internal assertion failed ({context}): {detail}")]
    Internal { context: String, detail: String },
}

impl Error {
    pub fn internal(context: &str, detail: impl Into<String>) -> Self {
        Error::Internal {
            context: context.to_string(),
            detail: detail.into(),
        }
    }

    pub fn rejected(detail: impl Into<String>) -> Self {
        Error::RejectedInput {
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

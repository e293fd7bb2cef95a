use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("operands belong to different algebras")]
    ParentMismatch,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid parameters: {0}")]
    Param(String),

    #[error("missing context: {0}")]
    Context(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("not a reflection: {0}")]
    Reflection(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("element {0} commutes with the (-1)-eigenspace; the input cannot be a division algebra")]
    NucleusContradiction(String),

    #[error("result is irrational: {0}; retry in float mode")]
    NotExact(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

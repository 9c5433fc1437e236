use thiserror::Error;

use crate::elem::Tag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QaError {
    #[error("instance mismatch: {left} vs {right}")]
    TagMismatch { left: Tag, right: Tag },
    #[error("function tuples over different index sets ({left} vs {right})")]
    IndexMismatch { left: usize, right: usize },
    #[error("closed bounded sets must be nonempty")]
    EmptySet,
    #[error("interval endpoints out of order: [{lo}, {hi}]")]
    InvertedInterval { lo: String, hi: String },
    #[error("disk radius must be non-negative, got {0}")]
    NegativeRadius(String),
    #[error("{0} is an algebra: operation unsupported")]
    Unsupported(Tag),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("{0}")]
    Domain(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("result too large to materialize ({0} components)")]
    TooLarge(usize),
    #[error("malformed JSON element: {0}")]
    Json(String),
}

pub type Result<T, E = QaError> = std::result::Result<T, E>;

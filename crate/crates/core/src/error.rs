use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("dimension mismatch: left has {left} axes, right has {right}")]
    DimsMismatch { left: usize, right: usize },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("operation requires a matrix (2 axes), got {0} axes")]
    NotMatrix(usize),

    #[error("integer overflow while {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown fixture {name:?}; available: {available}")]
    UnknownFixture { name: String, available: String },
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signal too short: need at least {needed} samples, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero pivot at row {row} during tridiagonal elimination")]
    ZeroPivot { row: usize },

    #[error("tridiagonal system must have at least one row")]
    EmptySystem,

    #[error("noise distribution has zero standard deviation")]
    DegenerateDistribution,

    #[error("bad moving-average window {window} for signal of length {len}")]
    BadWindow { window: usize, len: usize },

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("unknown signal kind `{0}`")]
    BadKind(String),

    #[error("unknown algorithm `{0}`")]
    BadAlgorithm(String),

    #[error("no records to aggregate")]
    Empty,

    #[error("incomplete benchmark matrix: {0}")]
    IncompleteMatrix(String),
}

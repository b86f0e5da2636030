use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inexact division: ({dividend}) / ({divisor}) leaves a remainder")]
    InexactDivision { dividend: String, divisor: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("not a partition: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("partition {partition:?} does not have size {degree}")]
    PartitionSize {
        partition: Vec<usize>,
        degree: usize,
    },
    #[error("Hessenberg function is not nondecreasing at position {0}")]
    NotNondecreasing(usize),
    #[error("Hessenberg function lies below the diagonal at position {0}")]
    BelowDiagonal(usize),
    #[error("Hessenberg value out of range at position {0}")]
    OutOfRange(usize),
    #[error("empty Hessenberg function")]
    Empty,
    #[error("coefficient has degree above {0}; cannot reverse")]
    ReversalDegree(usize),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

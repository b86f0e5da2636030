use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the primes {primes:?} disagree on {what}: {first} vs {second}; rerun with another seed or with exact arithmetic")]
    PrimeDisagreement {
        what: String,
        primes: [u64; 2],
        first: String,
        second: String,
    },
    #[error("margin violation for {h}: nonzero coefficient of q^{degree} beyond the dimension {dimension}")]
    MarginViolation {
        h: String,
        degree: usize,
        dimension: usize,
    },
    #[error("non-integral trace: {0}")]
    NonIntegralTrace(String),
    #[error("n = {n} is beyond the supported size {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Core(#[from] twinllt_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

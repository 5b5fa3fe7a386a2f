use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("composition total {total} does not match {expected}")]
    CompositionMismatch { expected: usize, total: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("capacity exceeded: {required} basis elements requested, limit is {limit}")]
    Capacity { required: u128, limit: u128 },
    #[error("presentation integrity violated: {0}")]
    Integrity(String),
    #[error("rank {rank} is smaller than weight {weight}; weight lengths do not determine the degree")]
    RankBelowWeight { rank: usize, weight: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

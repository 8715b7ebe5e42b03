use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is outside the supported range (p <= {1})")]
    PrimeOutOfRange(u64, u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("ground set mismatch: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not a valid supercharacter theory: {0}")]
    InvalidTheory(String),
    #[error("operation requires an odd prime, got p = 2")]
    DegeneratePrime,
    #[error("infeasible request: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;

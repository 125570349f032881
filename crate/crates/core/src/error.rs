use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("binomial upper index {0} is negative; use the generalized binomial")]
    NegativeUpperIndex(i64),
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{value} is not a unit modulo {p}")]
    NotUnit { value: String, p: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("degenerate instance: {0}")]
    Degenerate(String),
    #[error("empty grid: no {0} given")]
    EmptyGrid(&'static str),
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("{0} has no cataloged recurrence")]
    NoRecurrence(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

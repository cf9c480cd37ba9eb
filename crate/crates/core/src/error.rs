use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("arguments {0} and {1} are not coprime")]
    NotCoprime(u64, u64),

    #[error("k = {k} exceeds m = {m}")]
    KExceedsM { m: u64, k: u64 },

    #[error("{what} = {requested} exceeds budget {limit}")]
    Budget {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("quotient expression is unbalanced: {numerator} numerator vs {denominator} denominator factors")]
    Unbalanced { numerator: usize, denominator: usize },

    #[error("expression is not a polynomial")]
    NotPolynomial,

    #[error("search exhausted: {0}")]
    Exhausted(String),

    #[error("claim violated: {0}")]
    ClaimViolated(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

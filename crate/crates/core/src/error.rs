use thiserror::Error;

/// Errors raised by the exact-arithmetic kernels and the layers built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole: denominator {denominator} vanishes at the evaluation point")]
    Pole { denominator: String },

    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("linear system has no solution")]
    NoSolution,

    #[error("linear system has more than one solution")]
    NonUnique,

    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

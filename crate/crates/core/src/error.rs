use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {arity} exceeds the configured maximum of {limit}")]
    Capacity { arity: usize, limit: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("term `{term}` is not multilinear: variable `{var}` occurs more than once")]
    NonMultilinear { term: String, var: char },

    #[error("term `{term}` uses variables {found:?} but the expression uses {expected:?}")]
    VariableMismatch {
        term: String,
        expected: Vec<char>,
        found: Vec<char>,
    },

    #[error("identity has arity {found}, expected {expected}")]
    Arity { found: usize, expected: usize },

    #[error("prime {prime} divides a denominator in the input; choose a different prime")]
    Field { prime: u64 },

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("series error: {0}")]
    Series(String),

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("relations file: {0}")]
    RelationsFile(String),
}

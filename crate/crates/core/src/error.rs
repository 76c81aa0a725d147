use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("length mismatch: expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },

    #[error("polynomial ring has no variables")]
    EmptyRing,

    #[error("degree m = {0} is not a positive integer; use the closed-form moduli calculus for rational m")]
    NonIntegerDegree(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid Hilbert polynomial: {0}")]
    InvalidHilbertPolynomial(String),

    #[error("degenerate curve specification: {0}")]
    DegenerateSpec(String),

    #[error("monomial set {index} is not a basis of the degree-m quotient (rank {rank}, expected {expected})")]
    NotABasis {
        index: usize,
        rank: usize,
        expected: usize,
    },

    #[error("pole: {0}")]
    Pole(String),

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

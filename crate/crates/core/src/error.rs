use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polynomials belong to different presentations ({0})")]
    PresentationMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("weight not in polynomial region")]
    NotInPolynomialRegion,

    #[error("weight must be integral here")]
    NonIntegerWeight,

    #[error("weight must be strictly positive here")]
    NotPositive,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("weight lies outside the Groebner region")]
    OutsideGroebnerRegion,

    #[error("verification failed: {0}")]
    VerificationFailed(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

use thiserror::Error;

/// Errors raised by the tropical toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the tropical zero (infinity)")]
    DivisionByInfinity,
    #[error("dequantization base must be greater than 1, got {0}")]
    BadBase(String),
    #[error("coordinate {0} is infinite but the polynomial has a negative exponent in it")]
    InfiniteCoordinate(usize),
    #[error("cell enumeration supports at most 3 variables, got {0}")]
    TooManyVariables(usize),
    #[error("valuation {valuation} cannot be applied to {element}")]
    KindMismatch { valuation: String, element: String },
    #[error("{0} is not a prime")]
    BadPrime(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subset has size {got}, expected {expected}")]
    BadSubsetSize { expected: usize, got: usize },
    #[error("all maximal minors vanish")]
    RankDeficient,
    #[error("bounded search found no solution: {0}")]
    NotFound(String),
    #[error("degree {got} exceeds the truncation degree {max}")]
    DegreeTooHigh { max: u32, got: i64 },
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByInfinity => "DivisionByInfinity",
            Error::BadBase(_) => "BadBase",
            Error::InfiniteCoordinate(_) => "InfiniteCoordinate",
            Error::TooManyVariables(_) => "TooManyVariables",
            Error::KindMismatch { .. } => "KindMismatch",
            Error::BadPrime(_) => "BadPrime",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::BadSubsetSize { .. } => "BadSubsetSize",
            Error::RankDeficient => "RankDeficient",
            Error::NotFound(_) => "NotFound",
            Error::DegreeTooHigh { .. } => "DegreeTooHigh",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::AlphabetMismatch(..) => "AlphabetMismatch",
            Error::TooLarge(_) => "TooLarge",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("invalid decoration: {0}")]
    InvalidDecoration(String),
    #[error("object of size {size} exceeds the supported maximum {max}")]
    TooLarge { size: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("alphabet mismatch: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<String>, Vec<String>),
    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),
    #[error("left_strip by `{letter}`: word `{word}` does not start with it")]
    StripViolation { letter: String, word: String },
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),
    #[error("unknown identifier: {0}")]
    Unknown(String),
    #[error("enumeration bound exceeded: n = {n} > {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

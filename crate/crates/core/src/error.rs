use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MzvError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("matrix is not unimodular (det = {0})")]
    NonUnimodular(BigInt),
    #[error("unsupported matrix order {0} (must be 1..=8)")]
    InvalidOrder(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("index set ({0}) is not admissible")]
    NotAdmissible(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("series evaluation did not converge within {terms} terms at {digits} digits")]
    PrecisionCap { digits: u32, terms: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, MzvError>;

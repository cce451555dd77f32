use thiserror::Error;

/// Errors raised by the workbench.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("permutation degree mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid transposition ({i}, {j}) for n = {n}")]
    InvalidTransposition { i: usize, j: usize, n: usize },

    #[error("{0} does not commute with (1 2)")]
    NotInCentralizer(String),

    #[error("n = {n} is too small (need n >= {min})")]
    RankTooSmall { n: usize, min: usize },

    #[error("{what} is not valid here: {detail}")]
    Unsupported { what: String, detail: String },

    #[error("slot {slot} out of range for tensor degree {degree}")]
    SlotOutOfRange { slot: usize, degree: usize },

    #[error("resource budget exceeded: {what} needs {required}, limit {limit}")]
    BudgetExceeded {
        what: String,
        required: u128,
        limit: u128,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

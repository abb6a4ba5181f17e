use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// `NotAnInteger` and `NonDivisible` are integrality sentinels: the
/// character-sum formulas guarantee integer results, so seeing either one
/// from an enumerator routine means an implementation bug rather than bad
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration of {needed} words exceeds the budget of {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("cyclotomic value is not a rational integer")]
    NotAnInteger,

    #[error("coefficient {value} is not divisible by {divisor}")]
    NonDivisible { value: String, divisor: String },

    #[error("root-of-unity order mismatch: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for the two integrality sentinels.
    pub fn is_integrality_violation(&self) -> bool {
        matches!(self, Error::NotAnInteger | Error::NonDivisible { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

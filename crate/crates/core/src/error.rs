use thiserror::Error;

/// Errors raised by the algebra and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field description: {0}")]
    InvalidField(String),
    #[error("division by zero in the field")]
    DivisionByZero,
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("operation requires characteristic 2, field has characteristic {0}")]
    UnsupportedCharacteristic(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generators do not describe an ideal: {0}")]
    NotAnIdeal(String),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("sweep budget exceeded: {needed} candidates, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a Laurent polynomial")]
    NotALaurentPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
}

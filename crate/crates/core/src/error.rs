use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("non-integral value: {0}")]
    NonIntegral(String),
    #[error("series is truncated: {0}")]
    Incomplete(String),
    #[error("fractional exponent: {0}")]
    FractionalExponent(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("divergent product: {0}")]
    Divergent(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

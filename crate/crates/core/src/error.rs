use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} has no square root in the exact backend; use a rational square such as 1/4")]
    NotRationalSquare(String),
    /// A result needs an irrational square root the exact backend cannot hold.
    #[error("not representable in the exact backend: {0}")]
    Inexact(String),
    #[error("cannot parse number {0:?}")]
    Parse(String),
    #[error("grid too coarse: {0}")]
    UnderResolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;

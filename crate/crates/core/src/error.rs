use thiserror::Error;

use crate::poly::PolyError;
use crate::realroot::RealRootError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("genericity violation: {0}")]
    GenericityViolation(String),
    /// The discriminant of the curve vanishes identically.
    #[error("degenerate curve: resultant of omega and its x2-derivative is zero")]
    DegenerateCurve,
    #[error("point is critical for the projection onto the plane")]
    CriticalPoint,
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<PolyError> for Error {
    fn from(e: PolyError) -> Self {
        Error::Internal(e.to_string())
    }
}

impl From<RealRootError> for Error {
    fn from(e: RealRootError) -> Self {
        match e {
            RealRootError::GenericityViolation(m) => Error::GenericityViolation(m),
            other => Error::Internal(other.to_string()),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

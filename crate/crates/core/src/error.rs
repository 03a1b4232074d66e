use thiserror::Error;

/// Errors raised by the arithmetic and decision routines.
///
/// `Precondition` covers caller mistakes (bad indices, parameters outside a
/// theorem's hypotheses). `Internal` means an identity that must hold by
/// construction did not; it points at a bug in this crate, never at the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid manifold invariants: {}", .0.join("; "))]
    InvalidInvariants(Vec<String>),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

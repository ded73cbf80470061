use thiserror::Error;

use crate::poly::MultiPoly;
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not divisible, remainder {0}")]
    NotDivisible(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("degenerate extension: {0}")]
    DegenerateExtension(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Failed exact division; the remainder of multivariate division is the
/// witness.
#[derive(Debug, Clone)]
pub struct NotDivisible<C: Scalar> {
    pub remainder: MultiPoly<C>,
}

impl<C: Scalar> std::fmt::Display for NotDivisible<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "not divisible, remainder {}", self.remainder.abbreviated(6))
    }
}

impl<C: Scalar> std::error::Error for NotDivisible<C> {}

impl<C: Scalar> From<NotDivisible<C>> for PolyError {
    fn from(e: NotDivisible<C>) -> Self {
        PolyError::NotDivisible(e.remainder.abbreviated(6))
    }
}

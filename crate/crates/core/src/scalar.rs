//! Coefficient scalars.
//!
//! Every polynomial in the crate is generic over a [`Scalar`]. Two concrete
//! scalars exist: [`Rational`](crate::Rational) for exact identities over Q
//! and [`Fp`](crate::Fp) for the finite-field oracle.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse coefficient {0:?}")]
    Parse(String),
    #[error("denominator {0} is not invertible in this field")]
    NotInvertible(String),
    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
}

/// A field element usable as a polynomial coefficient.
///
/// `Zero::zero()` and `One::one()` must work without a domain. For runtime
/// moduli this is solved by a wildcard domain that adopts the other operand's
/// modulus (see [`Fp`](crate::Fp)).
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    type Domain: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn domain(&self) -> Self::Domain;

    /// Combines two domains, failing when they are incompatible.
    fn join_domains(a: &Self::Domain, b: &Self::Domain) -> Result<Self::Domain, ScalarError>;

    fn from_i64_in(domain: &Self::Domain, v: i64) -> Self;

    fn from_ratio_in(domain: &Self::Domain, num: &BigInt, den: &BigInt) -> Result<Self, ScalarError>;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Serialized form used in polynomial JSON.
    fn to_coeff_string(&self) -> String;

    fn parse_coeff(domain: &Self::Domain, s: &str) -> Result<Self, ScalarError>;

    /// Whether `Display` of this value starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            let b = base.clone();
            base *= &b;
            e >>= 1;
        }
        acc
    }
}

/// Parses `"n"` or `"n/d"` into a pair of big integers.
pub(crate) fn parse_ratio(s: &str) -> Result<(BigInt, BigInt), ScalarError> {
    let bad = || ScalarError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok((n, d))
        }
        None => Ok((s.parse().map_err(|_| bad())?, BigInt::one())),
    }
}

//! A minimal commutative-ring interface shared by polynomials, rational
//! functions and the two-root extension, so that formula builders can be
//! written once.

use crate::poly::MultiPoly;
use crate::scalar::Scalar;

pub trait Algebra: Clone + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, v: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn is_zero_elem(&self) -> bool;

    fn scaled_by(&self, k: i64) -> Self {
        self.times(&self.from_i64_like(k))
    }
}

impl<C: Scalar> Algebra for MultiPoly<C> {
    fn zero_like(&self) -> Self {
        MultiPoly::zero_like(self)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one_like(self)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        MultiPoly::from_i64_like(self, v)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn scaled_by(&self, k: i64) -> Self {
        self.scale(&C::from_i64_in(self.domain(), k))
    }
}

/// Sum of `coeff * term` pairs.
pub fn linear_combination<A: Algebra>(zero: &A, items: &[(i64, A)]) -> A {
    items
        .iter()
        .fold(zero.clone(), |acc, (k, t)| acc.plus(&t.scaled_by(*k)))
}

macro_rules! scalar_algebra {
    ($t:ty) => {
        impl Algebra for $t {
            fn zero_like(&self) -> Self {
                <$t as Scalar>::from_i64_in(&self.domain(), 0)
            }
            fn one_like(&self) -> Self {
                <$t as Scalar>::from_i64_in(&self.domain(), 1)
            }
            fn from_i64_like(&self, v: i64) -> Self {
                <$t as Scalar>::from_i64_in(&self.domain(), v)
            }
            fn plus(&self, rhs: &Self) -> Self {
                self.clone() + rhs.clone()
            }
            fn minus(&self, rhs: &Self) -> Self {
                self.clone() - rhs.clone()
            }
            fn times(&self, rhs: &Self) -> Self {
                self.mul_ref(rhs)
            }
            fn negated(&self) -> Self {
                -self.clone()
            }
            fn is_zero_elem(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }
        }
    };
}

scalar_algebra!(crate::Rational);
scalar_algebra!(crate::Fp);

/// `x^k` by repeated squaring.
pub fn power<A: Algebra>(x: &A, mut k: u32) -> A {
    let mut acc = x.one_like();
    let mut base = x.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = acc.times(&base);
        }
        k >>= 1;
        if k > 0 {
            base = base.times(&base);
        }
    }
    acc
}

//! Rational functions over a polynomial ring.
//!
//! No multivariate gcd is attempted. Denominators are kept monic; when the
//! denominator is a single monomial, common monomial factors are cancelled,
//! which gives a unique representation in that case. Equality always
//! compares by cross-multiplication.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::PolyError;
use crate::monomial::{Monomial, Vars};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct RatFunc<C: Scalar> {
    num: MultiPoly<C>,
    den: MultiPoly<C>,
}

impl<C: Scalar> RatFunc<C> {
    pub fn new(num: MultiPoly<C>, den: MultiPoly<C>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::NotInvertible("zero denominator".into()));
        }
        num.checked_add(&den)?;
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: MultiPoly<C>) -> Self {
        let den = p.one_like();
        RatFunc { num: p, den }
    }

    pub fn zero(vars: &Vars, domain: &C::Domain) -> Self {
        Self::from_poly(MultiPoly::zero(vars, domain))
    }

    fn normalized(num: MultiPoly<C>, den: MultiPoly<C>) -> Self {
        if num.is_zero() {
            let one = den.one_like();
            return RatFunc { num, den: one };
        }
        let lc = den.leading().expect("nonzero").1.clone();
        let lci = lc.inv().expect("nonzero");
        let (mut num, mut den) = if lc.is_one() {
            (num, den)
        } else {
            (num.scale(&lci), den.scale(&lci))
        };
        if den.nterms() == 1 && !den.is_constant() {
            let g = monomial_content(&num).gcd(&den.terms()[0].0);
            if !g.is_one() {
                let gp = MultiPoly::term(num.vars(), num.domain(), g, C::from_i64_in(&lc.domain(), 1));
                num = num.div_exact(&gp).expect("monomial content divides");
                den = den.div_exact(&gp).expect("monomial content divides");
            }
        }
        RatFunc { num, den }
    }

    pub fn num(&self) -> &MultiPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly<C> {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The numerator divided by the (constant) denominator, if the value is a
    /// polynomial.
    pub fn as_poly(&self) -> Option<MultiPoly<C>> {
        if self.den.is_constant() {
            let c = self.den.constant_term().inv().expect("nonzero");
            Some(self.num.scale(&c))
        } else {
            self.num.div_exact(&self.den).ok()
        }
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.num.is_zero() {
            return Err(PolyError::NotInvertible("zero rational function".into()));
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, PolyError> {
        Ok(self.times(&rhs.inv()?))
    }

    pub fn map_polys(&self, f: impl Fn(&MultiPoly<C>) -> MultiPoly<C>) -> Self {
        Self::normalized(f(&self.num), f(&self.den))
    }

    /// Value at a point; `None` when the denominator vanishes there.
    pub fn eval(&self, point: &[C]) -> Option<C> {
        let d = self.den.eval(point);
        d.inv().map(|di| self.num.eval(point).mul_ref(&di))
    }
}

/// Largest monomial dividing every term.
fn monomial_content<C: Scalar>(p: &MultiPoly<C>) -> Monomial {
    let mut it = p.terms().iter();
    let first = it.next().expect("nonzero").0.clone();
    it.fold(first, |acc, (m, _)| acc.gcd(m))
}

impl<C: Scalar> PartialEq for RatFunc<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<C: Scalar> Eq for RatFunc<C> {}

fn monomial_lcm_factors<C: Scalar>(
    a: &MultiPoly<C>,
    b: &MultiPoly<C>,
) -> Option<(MultiPoly<C>, MultiPoly<C>, MultiPoly<C>)> {
    if a.nterms() != 1 || b.nterms() != 1 {
        return None;
    }
    let (ma, ca) = &a.terms()[0];
    let (mb, cb) = &b.terms()[0];
    if !ca.is_one() || !cb.is_one() {
        return None;
    }
    let l = ma.lcm(mb);
    let one = ca.clone();
    let fa = MultiPoly::term(a.vars(), a.domain(), ma.quotient_of(&l), one.clone());
    let fb = MultiPoly::term(a.vars(), a.domain(), mb.quotient_of(&l), one.clone());
    Some((MultiPoly::term(a.vars(), a.domain(), l, one), fa, fb))
}

impl<C: Scalar> Algebra for RatFunc<C> {
    fn zero_like(&self) -> Self {
        Self::from_poly(self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::from_poly(self.num.one_like())
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Self::from_poly(self.num.from_i64_like(v))
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if let Some((l, fa, fb)) = monomial_lcm_factors(&self.den, &rhs.den) {
            return Self::normalized(&(&self.num * &fa) + &(&rhs.num * &fb), l);
        }
        Self::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        Self::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
    fn negated(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn scaled_by(&self, k: i64) -> Self {
        Self::normalized(self.num.scaled_by(k), self.den.clone())
    }
}

impl<C: Scalar> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<C: Scalar> fmt::Debug for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn monomial_denominators_cancel() {
        let v = Vars::new(&["s", "t"]);
        let g = MultiPoly::<Rational>::gens(&v, &());
        let (s, t) = (&g[0], &g[1]);
        let a = RatFunc::new(&(s * t) + &(s * s), s.scale(&Rational::from(2))).unwrap();
        assert_eq!(a.den(), &s.one_like());
        assert_eq!(a.num(), &(t + s).scale(&Rational::new(1, 2)));
        let b = RatFunc::new(t.clone(), s.clone()).unwrap();
        let c = RatFunc::new(s.clone(), t * t).unwrap();
        let sum = b.plus(&c);
        assert_eq!(sum.den(), &(s * &(t * t)));
        assert_eq!(b.times(&b.inv().unwrap()), b.one_like());
    }

    #[test]
    fn general_denominators_compare_by_cross_multiplication() {
        let v = Vars::new(&["x", "y"]);
        let g = MultiPoly::<Rational>::gens(&v, &());
        let d = &g[0] + &g[1];
        let a = RatFunc::new(&d * &g[0], &d * &d).unwrap();
        let b = RatFunc::new(g[0].clone(), d.clone()).unwrap();
        assert_eq!(a, b);
        assert!(a.minus(&b).is_zero());
    }
}

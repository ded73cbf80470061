//! Polynomials in the conic parameter d over any commutative ring.

use crate::algebra::Algebra;

/// c_0 + c_1 d + c_2 d^2 + ...; trailing zero coefficients are allowed, so
/// the stored length is a nominal degree bound.
#[derive(Debug, Clone)]
pub struct DPoly<A> {
    coeffs: Vec<A>,
}

impl<A: Algebra> DPoly<A> {
    pub fn new(coeffs: Vec<A>) -> Self {
        assert!(!coeffs.is_empty(), "a d-polynomial needs a coefficient");
        DPoly { coeffs }
    }

    pub fn constant(a: A) -> Self {
        DPoly { coeffs: vec![a] }
    }

    /// a + b d
    pub fn linear(a: A, b: A) -> Self {
        DPoly { coeffs: vec![a, b] }
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> A {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    /// Actual degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero_elem())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DPoly {
            coeffs: (0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DPoly {
            coeffs: (0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero_elem() {
                    continue;
                }
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        DPoly { coeffs: out }
    }

    pub fn scale(&self, a: &A) -> Self {
        DPoly {
            coeffs: self.coeffs.iter().map(|c| c.times(a)).collect(),
        }
    }

    /// Multiplies by d.
    pub fn shift(&self) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like()];
        coeffs.extend(self.coeffs.iter().cloned());
        DPoly { coeffs }
    }

    pub fn eval(&self, d: &A) -> A {
        self.coeffs
            .iter()
            .rev()
            .fold(d.zero_like(), |acc, c| acc.times(d).plus(c))
    }

    pub fn map<B: Algebra>(&self, f: impl Fn(&A) -> B) -> DPoly<B> {
        DPoly {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Numerator of `self` at the root d = -c0/c1 of a linear `lin`:
    /// Σ_k s_k (-c0)^k c1^(n-k), n the nominal degree of `self`.
    pub fn eliminate_with_linear(&self, lin: &Self) -> A {
        let c0 = lin.coeff(0);
        let c1 = lin.coeff(1);
        let n = self.coeffs.len() - 1;
        let mc0 = c0.negated();
        let mut acc = c0.zero_like();
        for (k, s) in self.coeffs.iter().enumerate() {
            let mut t = s.clone();
            for _ in 0..k {
                t = t.times(&mc0);
            }
            for _ in k..n {
                t = t.times(&c1);
            }
            acc = acc.plus(&t);
        }
        acc
    }
}

impl<A: Algebra> PartialEq for DPoly<A> {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = DPoly::new(vec![r(1), r(2), r(3)]);
        let q = DPoly::linear(r(-1), r(1));
        assert_eq!(p.mul(&q).eval(&r(1)), r(0));
        assert_eq!(p.eval(&r(2)), r(17));
        assert_eq!(p.shift().coeff(3), r(3));
        assert_eq!(DPoly::new(vec![r(1), r(0)]).degree(), Some(0));
    }

    #[test]
    fn elimination_is_scaled_evaluation() {
        // d = 2/3 from 2 - 3d; p(2/3) * 3^2
        let lin = DPoly::linear(r(2), r(-3));
        let p = DPoly::new(vec![r(1), r(1), r(1)]);
        let v = p.eval(&Rational::new(2, 3)) * r(9);
        assert_eq!(p.eliminate_with_linear(&lin), v);
    }
}

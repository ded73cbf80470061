//! The biquadratic extension by two roots α, β of the tangent-cone
//! quadratics
//!
//!   a2·α² + a1·α + a0 = 0,   b2·β² + b1·β + b0 = 0
//!
//! over a field of rational functions. Elements are kept in the normal form
//! c00 + c10·α + c01·β + c11·αβ.

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::PolyError;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;

/// Monic reductions α² = pα + q and β² = rβ + s.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadRelations<C: Scalar> {
    alpha: [RatFunc<C>; 3],
    beta: [RatFunc<C>; 3],
    p: RatFunc<C>,
    q: RatFunc<C>,
    r: RatFunc<C>,
    s: RatFunc<C>,
}

impl<C: Scalar> QuadRelations<C> {
    /// Relations `alpha[2]·α² + alpha[1]·α + alpha[0] = 0` and likewise for β.
    pub fn new(alpha: [RatFunc<C>; 3], beta: [RatFunc<C>; 3]) -> Result<Self, PolyError> {
        if alpha[2].is_zero() || beta[2].is_zero() {
            return Err(PolyError::DegenerateExtension(
                "leading coefficient of a defining quadratic vanishes".into(),
            ));
        }
        let ia = alpha[2].inv()?;
        let ib = beta[2].inv()?;
        let p = alpha[1].times(&ia).negated();
        let q = alpha[0].times(&ia).negated();
        let r = beta[1].times(&ib).negated();
        let s = beta[0].times(&ib).negated();
        Ok(QuadRelations {
            alpha,
            beta,
            p,
            q,
            r,
            s,
        })
    }

    pub fn alpha_coeffs(&self) -> &[RatFunc<C>; 3] {
        &self.alpha
    }

    pub fn beta_coeffs(&self) -> &[RatFunc<C>; 3] {
        &self.beta
    }

    /// Sum of the two α roots.
    pub fn alpha_trace(&self) -> &RatFunc<C> {
        &self.p
    }

    pub fn beta_trace(&self) -> &RatFunc<C> {
        &self.r
    }
}

#[derive(Clone)]
pub struct AlphaBeta<C: Scalar> {
    /// c00, c10 (α), c01 (β), c11 (αβ)
    c: [RatFunc<C>; 4],
    rel: Arc<QuadRelations<C>>,
}

impl<C: Scalar> AlphaBeta<C> {
    pub fn from_base(x: RatFunc<C>, rel: &Arc<QuadRelations<C>>) -> Self {
        let z = x.zero_like();
        AlphaBeta {
            c: [x, z.clone(), z.clone(), z],
            rel: rel.clone(),
        }
    }

    pub fn from_parts(c: [RatFunc<C>; 4], rel: &Arc<QuadRelations<C>>) -> Self {
        AlphaBeta { c, rel: rel.clone() }
    }

    pub fn alpha(rel: &Arc<QuadRelations<C>>) -> Self {
        let z = rel.p.zero_like();
        let o = rel.p.one_like();
        Self::from_parts([z.clone(), o, z.clone(), z], rel)
    }

    pub fn beta(rel: &Arc<QuadRelations<C>>) -> Self {
        let z = rel.p.zero_like();
        let o = rel.p.one_like();
        Self::from_parts([z.clone(), z.clone(), o, z], rel)
    }

    pub fn parts(&self) -> &[RatFunc<C>; 4] {
        &self.c
    }

    pub fn relations(&self) -> &Arc<QuadRelations<C>> {
        &self.rel
    }

    pub fn is_base(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// The conjugate under α ↦ α′ = p − α.
    pub fn conj_alpha(&self) -> Self {
        let p = &self.rel.p;
        let [c00, c10, c01, c11] = &self.c;
        Self::from_parts(
            [
                c00.plus(&c10.times(p)),
                c10.negated(),
                c01.plus(&c11.times(p)),
                c11.negated(),
            ],
            &self.rel,
        )
    }

    /// The conjugate under β ↦ β′ = r − β.
    pub fn conj_beta(&self) -> Self {
        let r = &self.rel.r;
        let [c00, c10, c01, c11] = &self.c;
        Self::from_parts(
            [
                c00.plus(&c01.times(r)),
                c10.plus(&c11.times(r)),
                c01.negated(),
                c11.negated(),
            ],
            &self.rel,
        )
    }

    /// Product of the four conjugates; lies in the base field.
    pub fn norm(&self) -> RatFunc<C> {
        let a = self.conj_alpha();
        let b = self.conj_beta();
        let ab = a.conj_beta();
        let n = self.times(&a).times(&b).times(&ab);
        debug_assert!(n.is_base());
        n.c[0].clone()
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        let a = self.conj_alpha();
        let b = self.conj_beta();
        let ab = a.conj_beta();
        let co = a.times(&b).times(&ab);
        let n = self.times(&co);
        if !n.is_base() {
            return Err(PolyError::NotInvertible("norm left the base field".into()));
        }
        if n.c[0].is_zero() {
            return Err(PolyError::NotInvertible("zero norm".into()));
        }
        let ni = n.c[0].inv()?;
        Ok(co.scale_base(&ni))
    }

    pub fn scale_base(&self, k: &RatFunc<C>) -> Self {
        Self::from_parts(
            [
                self.c[0].times(k),
                self.c[1].times(k),
                self.c[2].times(k),
                self.c[3].times(k),
            ],
            &self.rel,
        )
    }

    /// Applies `f` to each component, keeping the relations.
    pub fn map_parts(&self, f: impl Fn(&RatFunc<C>) -> RatFunc<C>) -> Self {
        Self::from_parts([f(&self.c[0]), f(&self.c[1]), f(&self.c[2]), f(&self.c[3])], &self.rel)
    }

    /// Exchanges the roles of α and β; `rel` must be the swapped relations.
    pub fn swap_roots(&self, rel: &Arc<QuadRelations<C>>) -> Self {
        Self::from_parts(
            [
                self.c[0].clone(),
                self.c[2].clone(),
                self.c[1].clone(),
                self.c[3].clone(),
            ],
            rel,
        )
    }
}

impl<C: Scalar> PartialEq for AlphaBeta<C> {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c
    }
}

impl<C: Scalar> Algebra for AlphaBeta<C> {
    fn zero_like(&self) -> Self {
        Self::from_base(self.c[0].zero_like(), &self.rel)
    }
    fn one_like(&self) -> Self {
        Self::from_base(self.c[0].one_like(), &self.rel)
    }
    fn from_i64_like(&self, v: i64) -> Self {
        Self::from_base(self.c[0].from_i64_like(v), &self.rel)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Self::from_parts(
            [
                self.c[0].plus(&rhs.c[0]),
                self.c[1].plus(&rhs.c[1]),
                self.c[2].plus(&rhs.c[2]),
                self.c[3].plus(&rhs.c[3]),
            ],
            &self.rel,
        )
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self::from_parts(
            [
                self.c[0].minus(&rhs.c[0]),
                self.c[1].minus(&rhs.c[1]),
                self.c[2].minus(&rhs.c[2]),
                self.c[3].minus(&rhs.c[3]),
            ],
            &self.rel,
        )
    }
    fn times(&self, rhs: &Self) -> Self {
        let zero = self.c[0].zero_like();
        // e[i][j] is the coefficient of α^i β^j before reduction
        let mut e: [[RatFunc<C>; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| zero.clone()));
        let idx = [(0, 0), (1, 0), (0, 1), (1, 1)];
        for (a, &(ia, ja)) in self.c.iter().zip(idx.iter()) {
            if a.is_zero() {
                continue;
            }
            for (b, &(ib, jb)) in rhs.c.iter().zip(idx.iter()) {
                if b.is_zero() {
                    continue;
                }
                let t = a.times(b);
                e[ia + ib][ja + jb] = e[ia + ib][ja + jb].plus(&t);
            }
        }
        let rel = &self.rel;
        for row in e.iter_mut() {
            if !row[2].is_zero() {
                row[1] = row[1].plus(&row[2].times(&rel.r));
                row[0] = row[0].plus(&row[2].times(&rel.s));
            }
        }
        for j in 0..2 {
            if !e[2][j].is_zero() {
                e[1][j] = e[1][j].plus(&e[2][j].times(&rel.p));
                e[0][j] = e[0][j].plus(&e[2][j].times(&rel.q));
            }
        }
        Self::from_parts(
            [e[0][0].clone(), e[1][0].clone(), e[0][1].clone(), e[1][1].clone()],
            &self.rel,
        )
    }
    fn negated(&self) -> Self {
        self.map_parts(|x| x.negated())
    }
    fn is_zero_elem(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
    fn scaled_by(&self, k: i64) -> Self {
        self.map_parts(|x| x.scaled_by(k))
    }
}

impl<C: Scalar> fmt::Display for AlphaBeta<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "*alpha", "*beta", "*alpha*beta"];
        let mut first = true;
        for (c, n) in self.c.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]{n}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for AlphaBeta<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Vars;
    use crate::poly::MultiPoly;
    use crate::Rational;

    fn symbols() -> (Vec<RatFunc<Rational>>, Arc<QuadRelations<Rational>>) {
        let v = Vars::new(&["S30", "S31", "S32", "S20", "S11", "S02"]);
        let g: Vec<RatFunc<Rational>> = MultiPoly::gens(&v, &()).into_iter().map(RatFunc::from_poly).collect();
        let rel = QuadRelations::new(
            [g[2].clone(), g[1].scaled_by(2), g[0].clone()],
            [g[5].clone(), g[4].scaled_by(2), g[3].clone()],
        )
        .unwrap();
        (g, Arc::new(rel))
    }

    #[test]
    fn alpha_squared_reduces() {
        let (g, rel) = symbols();
        let a = AlphaBeta::alpha(&rel);
        let sq = a.times(&a);
        let p = g[1].scaled_by(-2).div(&g[0]).unwrap();
        let q = g[2].negated().div(&g[0]).unwrap();
        assert_eq!(sq.parts()[1], p);
        assert_eq!(sq.parts()[0], q);
        assert!(sq.parts()[2].is_zero() && sq.parts()[3].is_zero());
    }

    #[test]
    fn vieta() {
        let (g, rel) = symbols();
        let a = AlphaBeta::alpha(&rel);
        let a2 = a.conj_alpha();
        let sum = a.plus(&a2);
        let prod = a.times(&a2);
        assert!(sum.is_base() && prod.is_base());
        assert_eq!(sum.parts()[0], g[1].scaled_by(-2).div(&g[0]).unwrap());
        assert_eq!(prod.parts()[0], g[2].div(&g[0]).unwrap());
    }

    #[test]
    fn identity_and_inverse() {
        let (g, rel) = symbols();
        let x = AlphaBeta::from_base(g[3].clone(), &rel)
            .plus(&AlphaBeta::alpha(&rel))
            .plus(&AlphaBeta::beta(&rel).times(&AlphaBeta::alpha(&rel)));
        assert_eq!(x.times(&x.one_like()), x);
        let y = AlphaBeta::alpha(&rel).plus(&x.one_like());
        let yi = y.inv().unwrap();
        assert_eq!(y.times(&yi), y.one_like());
    }

    #[test]
    fn degenerate_relations_rejected() {
        let (g, _) = symbols();
        let z = g[0].zero_like();
        let err = QuadRelations::new(
            [g[0].clone(), g[1].clone(), z],
            [g[0].clone(), g[1].clone(), g[2].clone()],
        );
        assert!(matches!(err, Err(PolyError::DegenerateExtension(_))));
    }
}

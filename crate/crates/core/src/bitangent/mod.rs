//! Bitangent lines to the Fermat quintic: contact conditions, the map to
//! the kernel coordinates M_i, base-locus membership and the Z4^4 locus.

pub mod dwork;

use thiserror::Error;

use crate::algebra::{power, Algebra};

pub use dwork::{dwork_cover_solve, dwork_matrix, projective_lift_count, DworkSolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitangentError {
    #[error("all coordinates are zero")]
    ZeroPoint,
    #[error("point lies in the base locus: every M_i vanishes")]
    BaseLocus,
    #[error("the root system has only the zero solution")]
    EmptyKernel,
    #[error("the root system has a kernel of dimension {0}")]
    FatKernel(usize),
    #[error("malformed root matrix: {0}")]
    BadRoots(String),
}

/// A point of P^4 with coordinates in any commutative ring.
#[derive(Debug, Clone)]
pub struct PointP4<A> {
    coords: [A; 5],
}

impl<A: Algebra> PointP4<A> {
    pub fn new(coords: [A; 5]) -> Result<Self, BitangentError> {
        if coords.iter().all(|c| c.is_zero_elem()) {
            return Err(BitangentError::ZeroPoint);
        }
        Ok(PointP4 { coords })
    }

    pub fn coords(&self) -> &[A; 5] {
        &self.coords
    }

    pub fn into_coords(self) -> [A; 5] {
        self.coords
    }

    /// Proportionality via vanishing 2x2 minors.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        proportional(&self.coords, &other.coords)
    }

    pub fn map<B: Algebra>(&self, f: impl Fn(&A) -> B) -> PointP4<B> {
        PointP4 {
            coords: std::array::from_fn(|i| f(&self.coords[i])),
        }
    }
}

impl<A: Algebra> PartialEq for PointP4<A> {
    fn eq(&self, other: &Self) -> bool {
        self.projectively_eq(other)
    }
}

pub fn proportional<A: Algebra>(a: &[A], b: &[A]) -> bool {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if !a[i].times(&b[j]).minus(&a[j].times(&b[i])).is_zero_elem() {
                return false;
            }
        }
    }
    true
}

fn equal<A: Algebra>(a: &A, b: &A) -> bool {
    a.minus(b).is_zero_elem()
}

/// Σ q_i^k p_i^(5-k) for k = 0, 1, 4, 5.
pub fn contact_residuals<A: Algebra>(p: &PointP4<A>, q: &PointP4<A>) -> [A; 4] {
    [0u32, 1, 4, 5].map(|k| {
        p.coords
            .iter()
            .zip(&q.coords)
            .fold(p.coords[0].zero_like(), |acc, (pi, qi)| {
                acc.plus(&power(qi, k).times(&power(pi, 5 - k)))
            })
    })
}

/// u_i = q_i / p_i; `None` when some p_i vanishes.
pub fn u_coordinates<C: crate::Scalar + Algebra>(p: &PointP4<C>, q: &PointP4<C>) -> Option<PointP4<C>> {
    let mut u = Vec::with_capacity(5);
    for (pi, qi) in p.coords.iter().zip(&q.coords) {
        u.push(qi.mul_ref(&pi.inv()?));
    }
    PointP4::new(u.try_into().ok()?).ok()
}

/// e_k of the given values, k = 0..=len.
pub fn elementary_values<A: Algebra>(xs: &[A], zero: &A) -> Vec<A> {
    let mut es = vec![zero.one_like()];
    for x in xs {
        let mut next = es.clone();
        next.push(zero.clone());
        for j in 1..next.len() {
            next[j] = next[j].plus(&es[j - 1].times(x));
        }
        es = next;
    }
    es
}

fn others<A: Clone>(u: &[A; 5], i: usize) -> Vec<A> {
    (0..5).filter(|&j| j != i).map(|j| u[j].clone()).collect()
}

/// d_i = Π_{j>k; j,k ≠ i} (u_j - u_k).
pub fn partial_discriminants<A: Algebra>(u: &[A; 5]) -> [A; 5] {
    std::array::from_fn(|i| {
        let mut acc = u[0].one_like();
        for j in 0..5 {
            for k in 0..j {
                if j != i && k != i {
                    acc = acc.times(&u[j].minus(&u[k]));
                }
            }
        }
        acc
    })
}

/// n_i = e2(i)^2 - e1(i) e3(i), with e_k(i) taken over the coordinates other
/// than u_i.
pub fn quartics<A: Algebra>(u: &[A; 5]) -> [A; 5] {
    std::array::from_fn(|i| {
        let e = elementary_values(&others(u, i), &u[0].zero_like());
        e[2].times(&e[2]).minus(&e[1].times(&e[3]))
    })
}

/// M_i = (-1)^i d_i n_i.
pub fn kernel_coords<A: Algebra>(u: &[A; 5]) -> [A; 5] {
    let d = partial_discriminants(u);
    let n = quartics(u);
    std::array::from_fn(|i| {
        let m = d[i].times(&n[i]);
        if i % 2 == 1 {
            m.negated()
        } else {
            m
        }
    })
}

/// U -> [M_0(U) : ... : M_4(U)].
pub fn m_map<A: Algebra>(u: &PointP4<A>) -> Result<PointP4<A>, BitangentError> {
    PointP4::new(kernel_coords(&u.coords)).map_err(|_| BitangentError::BaseLocus)
}

/// The plane through P = [1:..:1] and Q = U, with its two defining forms
/// Σ M_i v_i and Σ M_i u_i^4 v_i.
#[derive(Debug, Clone)]
pub struct BitangentDatum<A> {
    pub u: PointP4<A>,
    pub m: [A; 5],
    pub lambda_forms: [[A; 5]; 2],
}

impl<A: Algebra> BitangentDatum<A> {
    pub fn new(u: PointP4<A>) -> Self {
        let m = kernel_coords(&u.coords);
        let second = std::array::from_fn(|i| m[i].times(&power(&u.coords[i], 4)));
        BitangentDatum {
            lambda_forms: [m.clone(), second],
            u,
            m,
        }
    }

    /// Values of the two forms at `v`.
    pub fn eval_forms(&self, v: &[A; 5]) -> [A; 2] {
        self.lambda_forms.clone().map(|f| {
            f.iter()
                .zip(v)
                .fold(v[0].zero_like(), |acc, (a, b)| acc.plus(&a.times(b)))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum BaseLocus {
    /// V(u_i - u_j, u_k - u_l); a triple coincidence u_i = u_j = u_k is
    /// reported as `PlanePair(i, j, j, k)`.
    PlanePair(usize, usize, usize, usize),
    /// V(u_i - u_j, n_i)
    QuarticSurface(usize, usize),
    /// V(e2, e3)
    SexticComponent,
    NotInBaseLocus,
}

pub fn base_locus_classify<A: Algebra>(u: &PointP4<A>) -> BaseLocus {
    let c = &u.coords;
    // classes of equal coordinates
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..5 {
        match classes.iter_mut().find(|cl| equal(&c[cl[0]], &c[i])) {
            Some(cl) => cl.push(i),
            None => classes.push(vec![i]),
        }
    }
    let repeated: Vec<&Vec<usize>> = classes.iter().filter(|cl| cl.len() > 1).collect();
    if let Some(cl) = repeated.iter().find(|cl| cl.len() >= 3) {
        return BaseLocus::PlanePair(cl[0], cl[1], cl[1], cl[2]);
    }
    if repeated.len() >= 2 {
        let (a, b) = (repeated[0], repeated[1]);
        return BaseLocus::PlanePair(a[0], a[1], b[0], b[1]);
    }
    if let Some(cl) = repeated.first() {
        if quartics(c)[cl[0]].is_zero_elem() {
            return BaseLocus::QuarticSurface(cl[0], cl[1]);
        }
    }
    let e = elementary_values(c, &c[0].zero_like());
    if e[2].is_zero_elem() && e[3].is_zero_elem() {
        return BaseLocus::SexticComponent;
    }
    BaseLocus::NotInBaseLocus
}

/// An element [k] of Z4^4, written with five exponents normalized so that
/// k_0 = 0, with Q = [i^{k_j} p_j].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ExceptionalTag {
    pub k: [u8; 5],
    pub p_on_x: bool,
    pub q_on_x: bool,
}

impl ExceptionalTag {
    pub fn is_trivial(&self) -> bool {
        self.k.iter().all(|&k| k % 4 == 0)
    }

    /// The pair lies in X_[k] (both points on X).
    pub fn in_x_k(&self) -> bool {
        self.p_on_x && self.q_on_x
    }
}

/// i^k for a given square root of -1; odd powers need `sqrt_m1`.
fn i_power<A: Algebra>(one: &A, k: u8, sqrt_m1: Option<&A>) -> Option<A> {
    match (k % 4, sqrt_m1) {
        (0, _) => Some(one.clone()),
        (2, _) => Some(one.negated()),
        (1, Some(i)) => Some(i.clone()),
        (3, Some(i)) => Some(i.negated()),
        _ => None,
    }
}

/// Searches all 256 tags for Q ∝ [i^{k_j} p_j]. Without a square root of -1
/// only the even tags can be tested.
pub fn exceptional_tag<A: Algebra>(p: &PointP4<A>, q: &PointP4<A>, sqrt_m1: Option<&A>) -> Option<ExceptionalTag> {
    let one = p.coords[0].one_like();
    let fermat = |x: &PointP4<A>| {
        x.coords
            .iter()
            .fold(one.zero_like(), |acc, c| acc.plus(&power(c, 5)))
            .is_zero_elem()
    };
    for code in 0..256u32 {
        let k: [u8; 5] = [
            0,
            (code & 3) as u8,
            ((code >> 2) & 3) as u8,
            ((code >> 4) & 3) as u8,
            ((code >> 6) & 3) as u8,
        ];
        let mut image = Vec::with_capacity(5);
        for j in 0..5 {
            match i_power(&one, k[j], sqrt_m1) {
                Some(s) => image.push(s.times(&p.coords[j])),
                None => break,
            }
        }
        if image.len() < 5 {
            continue;
        }
        if proportional(&image, &q.coords) {
            return Some(ExceptionalTag {
                k,
                p_on_x: fermat(p),
                q_on_x: fermat(q),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, QPoly, Rational, Vars};

    fn q(v: [i64; 5]) -> PointP4<Rational> {
        PointP4::new(v.map(Rational::from)).unwrap()
    }

    #[test]
    fn zero_point_rejected() {
        assert!(PointP4::new([0i64; 5].map(Rational::from)).is_err());
    }

    #[test]
    fn projective_equality() {
        assert_eq!(q([1, 2, 3, 4, 5]), q([-2, -4, -6, -8, -10]));
        assert_ne!(q([1, 2, 3, 4, 5]), q([1, 2, 3, 4, 6]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            base_locus_classify(&q([1, 1, 2, 2, 3])),
            BaseLocus::PlanePair(0, 1, 2, 3)
        );
        assert_eq!(base_locus_classify(&q([0, 1, 2, 3, 4])), BaseLocus::NotInBaseLocus);
        assert_eq!(
            base_locus_classify(&q([5, 5, 5, 1, 2])),
            BaseLocus::PlanePair(0, 1, 1, 2)
        );
    }

    #[test]
    fn base_locus_matches_vanishing_kernel_over_f5_and_f7() {
        for p in [5u64, 7] {
            let n = p.pow(5);
            for code in 0..n {
                let mut c = code;
                let u: [Fp; 5] = std::array::from_fn(|_| {
                    let v = c % p;
                    c /= p;
                    Fp::from_u64(v, p)
                });
                let Ok(pt) = PointP4::new(u) else { continue };
                let in_base = kernel_coords(pt.coords()).iter().all(|m| m.is_zero_elem());
                let cls = base_locus_classify(&pt);
                assert_eq!(in_base, cls != BaseLocus::NotInBaseLocus, "p={p} u={u:?} {cls:?}");
            }
        }
    }

    #[test]
    fn m_map_sums_to_zero_symbolically() {
        let v = Vars::indexed("u", 5);
        let g = QPoly::gens(&v, &());
        let u: [QPoly; 5] = std::array::from_fn(|i| g[i].clone());
        let m = kernel_coords(&u);
        let s = m.iter().fold(g[0].zero_like(), |a, b| &a + b);
        assert!(s.is_zero());
    }

    #[test]
    fn plane_pair_is_base_locus() {
        assert_eq!(m_map(&q([3, 3, 7, 7, 1])).unwrap_err(), BitangentError::BaseLocus);
        assert!(m_map(&q([0, 1, 2, 3, 4])).is_ok());
    }

    #[test]
    fn datum_contains_both_points() {
        let d = BitangentDatum::new(q([0, 1, 2, 3, 5]));
        let one = [1i64; 5].map(Rational::from);
        assert!(d.eval_forms(&one).iter().all(|x| x.is_zero_elem()));
        assert!(d.eval_forms(d.u.coords()).iter().all(|x| x.is_zero_elem()));
    }

    #[test]
    fn tags() {
        let p = q([1, 2, 3, 4, 5]);
        let t = exceptional_tag(&p, &p, None).unwrap();
        assert!(t.is_trivial());
        let q2 = q([1, 2, 3, -4, -5]);
        assert_eq!(exceptional_tag(&p, &q2, None).unwrap().k, [0, 0, 0, 2, 2]);
        assert!(exceptional_tag(&p, &q([1, 2, 3, 4, 6]), None).is_none());
    }
}

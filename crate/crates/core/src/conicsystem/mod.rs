//! Conics through the two tangency points inside a plane section.
//!
//! Everything here is written against the S_mn coefficients of a frame,
//! δ F_Λ(x,y,z) = Σ_i M_i (x + u_i y + l_i z)^5, so the same builders run over
//! the formal S-symbol ring, over e-polynomials, over the case-study ring and
//! over F_p.

mod certificate;
mod cones;
mod dpoly;
mod export;
mod system;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::Algebra;
use crate::alphabeta::{AlphaBeta, QuadRelations};
use crate::error::PolyError;
use crate::fp::Fp;
use crate::monomial::Vars;
use crate::ratfunc::RatFunc;
use crate::scalar::Scalar;
use crate::{QAlphaBeta, QPoly, QRatFunc};

pub use certificate::{factor_certificate, svalues_from_quintic, SectionFactorization};
pub use cones::{discriminant_check, tangent_cone_quadrics, SimplexFrame};
pub use dpoly::DPoly;
pub use export::{export_frame_system, FrameExport};
pub use system::{
    build_system, conic_form, cubic_forms, eliminate_d, pencil_coefficients, recursion_report, recursion_residuals,
    ConicSystem, PencilCoefficients,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConicError {
    #[error("degenerate extension: {0}")]
    DegenerateExtension(String),
    #[error("degenerate pencil: {0}")]
    DegeneratePencil(String),
    #[error("discriminant is not a square: {0}")]
    NonResidue(String),
    #[error("invalid frame: {0}")]
    InvalidFrame(String),
    #[error("certificate failure, f*g - F = {difference}")]
    CertificateFailure { difference: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The S_mn that can be nonzero for a frame in Λ.
pub const S_KEYS: [(u32, u32); 15] = [
    (2, 0),
    (3, 0),
    (1, 1),
    (2, 1),
    (3, 1),
    (0, 2),
    (1, 2),
    (2, 2),
    (3, 2),
    (0, 3),
    (1, 3),
    (2, 3),
    (0, 4),
    (1, 4),
    (0, 5),
];

/// S_mn that vanish for every frame: the four kernel rows and the two Λ
/// equations.
pub const ZERO_KEYS: [(u32, u32); 6] = [(0, 0), (1, 0), (4, 0), (5, 0), (0, 1), (4, 1)];

pub fn s_name(m: u32, n: u32) -> String {
    format!("S{m}{n}")
}

/// S_mn for m + n ≤ 5 in some ring; absent entries read as zero.
#[derive(Debug, Clone)]
pub struct SValues<A> {
    map: BTreeMap<(u32, u32), A>,
    zero: A,
}

impl<A: Algebra> SValues<A> {
    pub fn new(zero: A) -> Self {
        SValues {
            map: BTreeMap::new(),
            zero,
        }
    }

    pub fn from_fn(zero: A, f: impl Fn(u32, u32) -> A) -> Self {
        let mut s = Self::new(zero);
        for n in 0..=5 {
            for m in 0..=5 - n {
                s.insert(m, n, f(m, n));
            }
        }
        s
    }

    pub fn insert(&mut self, m: u32, n: u32, v: A) {
        assert!(m + n <= 5, "S_{m}{n} out of range");
        self.map.insert((m, n), v);
    }

    pub fn get(&self, m: u32, n: u32) -> A {
        self.map.get(&(m, n)).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero(&self) -> &A {
        &self.zero
    }

    pub fn map<B: Algebra>(&self, zero: B, f: impl Fn(&A) -> B) -> SValues<B> {
        SValues {
            map: self.map.iter().map(|(k, v)| (*k, f(v))).collect(),
            zero,
        }
    }

    /// Keys among [`ZERO_KEYS`] whose value is not zero.
    pub fn nonvanishing_zero_keys(&self) -> Vec<(u32, u32)> {
        ZERO_KEYS
            .iter()
            .copied()
            .filter(|&(m, n)| !self.get(m, n).is_zero_elem())
            .collect()
    }

    /// The swap of the tangency points on S: S_mn ↦ S_{5-m-n,n}.
    pub fn swapped(&self) -> Self {
        SValues {
            map: self
                .map
                .iter()
                .map(|(&(m, n), v)| ((5 - m - n, n), v.clone()))
                .collect(),
            zero: self.zero.clone(),
        }
    }
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// F_0..F_5 of F_Λ = Σ_k F_k(x,y) z^k, with
/// F_k = Σ_{j+l=5-k} 5!/(j! l! k!) S_{jk} x^l y^j.
pub fn flambda_expand<A: Algebra>(s: &SValues<A>, x: &A, y: &A) -> [A; 6] {
    std::array::from_fn(|k| {
        let k = k as u32;
        let mut acc = s.zero().clone();
        for j in 0..=5 - k {
            let l = 5 - k - j;
            let c = factorial(5) / (factorial(j) * factorial(l) * factorial(k));
            let mono = crate::algebra::power(x, l).times(&crate::algebra::power(y, j));
            acc = acc.plus(&s.get(j, k).times(&mono).scaled_by(c));
        }
        acc
    })
}

/// One of the four pencils: the roots α of S30 α² + 2 S31 α + S32 and β of
/// S20 β² + 2 S11 β + S02, with the branch signs.
#[derive(Debug, Clone)]
pub struct PencilChoice<A> {
    pub alpha: A,
    pub beta: A,
    pub branch: (i8, i8),
}

impl<A: Algebra> PencilChoice<A> {
    pub fn label(&self) -> String {
        let sign = |b: i8| if b >= 0 { '+' } else { '-' };
        format!("alpha{} beta{}", sign(self.branch.0), sign(self.branch.1))
    }

    /// Residuals of the two defining quadratics; both vanish for a valid
    /// pencil.
    pub fn quadratic_residuals(&self, s: &SValues<A>) -> [A; 2] {
        let a = &self.alpha;
        let b = &self.beta;
        let ra = s
            .get(3, 0)
            .times(&a.times(a))
            .plus(&s.get(3, 1).times(a).scaled_by(2))
            .plus(&s.get(3, 2));
        let rb = s
            .get(2, 0)
            .times(&b.times(b))
            .plus(&s.get(1, 1).times(b).scaled_by(2))
            .plus(&s.get(0, 2));
        [ra, rb]
    }
}

/// Δ(R)/δ² = S11² − S20 S02.
pub fn delta_r<A: Algebra>(s: &SValues<A>) -> A {
    s.get(1, 1).times(&s.get(1, 1)).minus(&s.get(2, 0).times(&s.get(0, 2)))
}

/// Δ′(R)/δ² = S31² − S30 S32.
pub fn delta_prime_r<A: Algebra>(s: &SValues<A>) -> A {
    s.get(3, 1).times(&s.get(3, 1)).minus(&s.get(3, 0).times(&s.get(3, 2)))
}

fn check_pencil_preconditions<A: Algebra>(s: &SValues<A>) -> Result<(), ConicError> {
    let fail = |m: &str| Err(ConicError::DegenerateExtension(m.into()));
    if s.get(2, 0).is_zero_elem() {
        return fail("S20 = 0");
    }
    if s.get(3, 0).is_zero_elem() {
        return fail("S30 = 0");
    }
    if delta_r(s).is_zero_elem() {
        return fail("Delta(R) = 0");
    }
    if delta_prime_r(s).is_zero_elem() {
        return fail("Delta'(R) = 0");
    }
    Ok(())
}

/// The four pencils as formal roots, together with the S values lifted into
/// the two-root extension.
#[derive(Debug, Clone)]
pub struct FormalPencils<C: Scalar> {
    pub relations: Arc<QuadRelations<C>>,
    pub s: SValues<AlphaBeta<C>>,
    pub choices: [PencilChoice<AlphaBeta<C>>; 4],
}

pub fn pencil_roots<C: Scalar>(s: &SValues<RatFunc<C>>) -> Result<FormalPencils<C>, ConicError> {
    check_pencil_preconditions(s)?;
    let two = |a: RatFunc<C>| a.scaled_by(2);
    let rel = Arc::new(QuadRelations::new(
        [s.get(3, 2), two(s.get(3, 1)), s.get(3, 0)],
        [s.get(0, 2), two(s.get(1, 1)), s.get(2, 0)],
    )?);
    let lift = |v: &RatFunc<C>| AlphaBeta::from_base(v.clone(), &rel);
    let zero = lift(s.zero());
    let sl = s.map(zero, lift);
    let a = AlphaBeta::alpha(&rel);
    let b = AlphaBeta::beta(&rel);
    let a2 = a.conj_alpha();
    let b2 = b.conj_beta();
    let choices = [
        PencilChoice {
            alpha: a.clone(),
            beta: b.clone(),
            branch: (1, 1),
        },
        PencilChoice {
            alpha: a.clone(),
            beta: b2.clone(),
            branch: (1, -1),
        },
        PencilChoice {
            alpha: a2.clone(),
            beta: b,
            branch: (-1, 1),
        },
        PencilChoice {
            alpha: a2,
            beta: b2,
            branch: (-1, -1),
        },
    ];
    Ok(FormalPencils {
        relations: rel,
        s: sl,
        choices,
    })
}

/// Explicit roots over F_p; fails when a discriminant is a non-residue.
pub fn pencil_roots_fp(s: &SValues<Fp>) -> Result<[PencilChoice<Fp>; 4], ConicError> {
    check_pencil_preconditions(s)?;
    let dr = delta_r(s)
        .sqrt()
        .ok_or_else(|| ConicError::NonResidue("Delta(R)".into()))?;
    let dq = delta_prime_r(s)
        .sqrt()
        .ok_or_else(|| ConicError::NonResidue("Delta'(R)".into()))?;
    let i20 = s.get(2, 0).inv().expect("checked nonzero");
    let i30 = s.get(3, 0).inv().expect("checked nonzero");
    let alpha = |sg: i8| {
        let r = if sg > 0 { dq } else { -dq };
        (r - s.get(3, 1)) * i30
    };
    let beta = |sg: i8| {
        let r = if sg > 0 { dr } else { -dr };
        (r - s.get(1, 1)) * i20
    };
    Ok([(1, 1), (1, -1), (-1, 1), (-1, -1)].map(|(a, b)| PencilChoice {
        alpha: alpha(a),
        beta: beta(b),
        branch: (a, b),
    }))
}

/// Ring of the formal S symbols S20..S05 together with x and y.
pub fn formal_vars() -> Vars {
    let mut names: Vec<String> = S_KEYS.iter().map(|&(m, n)| s_name(m, n)).collect();
    names.push("x".into());
    names.push("y".into());
    Vars::new(&names)
}

/// The generic frame: every S_mn of [`S_KEYS`] is an independent symbol and
/// α, β are formal roots.
#[derive(Debug, Clone)]
pub struct FormalFrame {
    pub vars: Vars,
    pub base: SValues<QRatFunc>,
    pub pencils: FormalPencils<crate::Rational>,
    pub x: QAlphaBeta,
    pub y: QAlphaBeta,
}

impl FormalFrame {
    pub fn new() -> Self {
        let vars = formal_vars();
        let gens = QPoly::gens(&vars, &());
        let zero = QRatFunc::zero(&vars, &());
        let mut base = SValues::new(zero);
        for (i, &(m, n)) in S_KEYS.iter().enumerate() {
            base.insert(m, n, QRatFunc::from_poly(gens[i].clone()));
        }
        let pencils = pencil_roots(&base).expect("formal S symbols are generic");
        let rel = pencils.relations.clone();
        let lift = |p: &QPoly| AlphaBeta::from_base(QRatFunc::from_poly(p.clone()), &rel);
        let x = lift(&gens[S_KEYS.len()]);
        let y = lift(&gens[S_KEYS.len() + 1]);
        FormalFrame {
            vars,
            base,
            pencils,
            x,
            y,
        }
    }

    pub fn s(&self) -> &SValues<QAlphaBeta> {
        &self.pencils.s
    }

    /// The pencil with α, β the formal roots themselves.
    pub fn principal(&self) -> &PencilChoice<QAlphaBeta> {
        &self.pencils.choices[0]
    }

    /// The swap of P and Q: S_mn ↦ S_{5-m-n,n}, x ↔ y, α ↔ β.
    pub fn tau(&self, a: &QAlphaBeta) -> QAlphaBeta {
        let gens = QPoly::gens(&self.vars, &());
        let mut images = gens.clone();
        for (i, &(m, n)) in S_KEYS.iter().enumerate() {
            let j = S_KEYS
                .iter()
                .position(|&k| k == (5 - m - n, n))
                .expect("S keys closed under the swap");
            images[i] = gens[j].clone();
        }
        let nx = S_KEYS.len();
        images.swap(nx, nx + 1);
        let sub = |r: &QRatFunc| {
            let num = r.num().compose(&images).expect("same ring");
            let den = r.den().compose(&images).expect("same ring");
            QRatFunc::new(num, den).expect("nonzero denominator")
        };
        let mapped = a.map_parts(sub);
        mapped.swap_roots(&self.pencils.relations)
    }

    fn partial(&self, a: &QAlphaBeta, i: usize) -> QAlphaBeta {
        a.map_parts(|r| {
            assert_eq!(r.den().degree_in(i), 0, "denominators are free of x and y");
            QRatFunc::new(r.num().partial(i), r.den().clone()).expect("nonzero denominator")
        })
    }

    pub fn partial_x(&self, a: &QAlphaBeta) -> QAlphaBeta {
        self.partial(a, S_KEYS.len())
    }

    pub fn partial_y(&self, a: &QAlphaBeta) -> QAlphaBeta {
        self.partial(a, S_KEYS.len() + 1)
    }

    pub fn tau_dpoly(&self, p: &DPoly<QAlphaBeta>) -> DPoly<QAlphaBeta> {
        p.map(|c| self.tau(c))
    }
}

impl Default for FormalFrame {
    fn default() -> Self {
        Self::new()
    }
}

/// Clears the denominators of a d-polynomial over the formal extension and
/// returns it as a polynomial in the S symbols, x, y, alpha, beta and d,
/// together with the cleared denominator.
pub fn formal_to_poly(p: &DPoly<QAlphaBeta>, vars: &Vars) -> (QPoly, QPoly) {
    let mut names = vars.names().to_vec();
    names.extend(["alpha", "beta", "d"].map(String::from));
    let target = Vars::new(&names);
    let g = QPoly::gens(&target, &());
    let (ia, ib, id) = (names.len() - 3, names.len() - 2, names.len() - 1);
    let basis = [g[0].one_like(), g[ia].clone(), g[ib].clone(), &g[ia] * &g[ib]];
    let mut pieces: Vec<(QPoly, QPoly)> = Vec::new();
    let mut den = g[0].one_like();
    for (k, c) in p.coeffs().iter().enumerate() {
        for (slot, r) in c.parts().iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let num = r.num().embed(&target).expect("subring");
            let dn = r.den().embed(&target).expect("subring");
            let mono = &basis[slot] * &g[id].pow(k as u32);
            den = lcm_like(&den, &dn);
            pieces.push((&num * &mono, dn));
        }
    }
    let mut acc = g[0].zero_like();
    for (num, dn) in pieces {
        let f = den.div_exact(&dn).expect("lcm is a multiple");
        acc = &acc + &(&num * &f);
    }
    (acc, den)
}

/// A common multiple, exact for monomials and otherwise the product.
fn lcm_like(a: &QPoly, b: &QPoly) -> QPoly {
    if a.nterms() == 1 && b.nterms() == 1 {
        let m = a.terms()[0].0.lcm(&b.terms()[0].0);
        return QPoly::term(a.vars(), &(), m, crate::Rational::from(1));
    }
    if a.div_exact(b).is_ok() {
        return a.clone();
    }
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn f0_and_f2xy() {
        let f = FormalFrame::new();
        let s = f.s();
        let [f0, _, f2, _, _, f5] = flambda_expand(s, &f.x, &f.y);
        let xy = f.x.times(&f.y);
        let want0 = xy
            .times(&xy)
            .times(&s.get(2, 0).times(&f.x).plus(&s.get(3, 0).times(&f.y)))
            .scaled_by(10);
        assert_eq!(f0, want0);
        assert_eq!(f5, s.get(0, 5));
        // the xy-coefficient of F2 is 30(S12 x + S22 y); its second mixed
        // derivative is 60(S12 x + S22 y)
        let x3 = crate::algebra::power(&f.x, 3).times(&s.get(0, 2)).scaled_by(10);
        let y3 = crate::algebra::power(&f.y, 3).times(&s.get(3, 2)).scaled_by(10);
        let mixed = xy
            .times(&s.get(1, 2).times(&f.x).plus(&s.get(2, 2).times(&f.y)))
            .scaled_by(30);
        assert_eq!(f2, x3.plus(&y3).plus(&mixed));
    }

    #[test]
    fn vieta_on_formal_roots() {
        let f = FormalFrame::new();
        let s = f.s();
        let [ap, _, am, _] = f.pencils.choices.clone().map(|c| c.alpha);
        let sum = ap.plus(&am).times(&s.get(3, 0));
        assert_eq!(sum, s.get(3, 1).scaled_by(-2));
        let prod = ap.times(&am).times(&s.get(3, 0));
        assert_eq!(prod, s.get(3, 2));
        for c in &f.pencils.choices {
            for r in c.quadratic_residuals(s) {
                assert!(r.is_zero_elem());
            }
        }
    }

    #[test]
    fn fp_roots_satisfy_quadratics() {
        let p = 101;
        let s = SValues::from_fn(Fp::new(0, p), |m, n| Fp::new((7 * m + 13 * n + 3) as i64, p));
        match pencil_roots_fp(&s) {
            Ok(ch) => {
                for c in &ch {
                    assert!(c.quadratic_residuals(&s).iter().all(|r| r.value() == 0));
                }
            }
            Err(ConicError::NonResidue(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn beta_root_divides_tangent_cone_line() {
        // over F_p: S20 y^2 + 2 S11 y z + S02 z^2 has (y - β z) as a factor
        // exactly when β solves S20 β^2 + 2 S11 β + S02 = 0
        let p = 103;
        for seed in 1..40i64 {
            let s = SValues::from_fn(Fp::new(0, p), |m, n| {
                Fp::new(seed * (m as i64 + 3) * (n as i64 + 5) + m as i64 * 11, p)
            });
            let Ok(ch) = pencil_roots_fp(&s) else { continue };
            for c in &ch {
                // value of the binary form at (y, z) = (β, 1)
                let v = s.get(2, 0) * c.beta * c.beta + s.get(1, 1) * c.beta * Fp::new(2, p) + s.get(0, 2);
                assert_eq!(v.value(), 0);
            }
        }
    }

    #[test]
    fn precondition_errors() {
        let s = SValues::from_fn(Rational::from(0), |m, n| Rational::from((m + n) as i64));
        let mut z = s.clone();
        z.insert(2, 0, Rational::from(0));
        let zr = z.map(QRatFunc::zero(&formal_vars(), &()), |v| {
            QRatFunc::from_poly(QPoly::constant(&formal_vars(), &(), v.clone()))
        });
        assert!(matches!(pencil_roots(&zr), Err(ConicError::DegenerateExtension(_))));
    }

    #[test]
    fn tau_is_an_involution() {
        let f = FormalFrame::new();
        let a = f.principal().alpha.times(&f.s().get(1, 2)).plus(&f.x);
        assert_eq!(f.tau(&f.tau(&a)), a);
        assert_eq!(f.tau(&f.principal().alpha), f.principal().beta);
    }
}

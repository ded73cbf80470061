//! The cubic cofactor g = g0 + g1 z + g2 z² + g3 z³ of the conic
//! f = xy − (βx + αy) z + d z², and the five conditions for f·g = F_Λ.

use crate::algebra::Algebra;
use crate::conicsystem::dpoly::DPoly;
use crate::conicsystem::{flambda_expand, ConicError, FormalFrame, PencilChoice, SValues};
use crate::report::Report;
use crate::QAlphaBeta;

/// The x/y-coefficients of g1, g2 and g3 that enter the equations.
#[derive(Debug, Clone)]
pub struct PencilCoefficients<A> {
    /// x² coefficient of g1
    pub g1_p: A,
    /// y² coefficient of g1
    pub g1_q: A,
    /// ∂²g1/∂x∂y
    pub g1_xy: A,
    pub g2_p: DPoly<A>,
    pub g2_q: DPoly<A>,
    pub g3: DPoly<A>,
}

#[derive(Debug, Clone)]
pub struct ConicSystem<A> {
    /// E1..E5
    pub equations: [DPoly<A>; 5],
    pub coeffs: PencilCoefficients<A>,
    pub branch: (i8, i8),
}

impl<A: Algebra> ConicSystem<A> {
    /// Nominal d-degrees of E1..E5: 1, 1, 2, 2, 2.
    pub fn degree_profile(&self) -> [usize; 5] {
        self.equations.clone().map(|e| e.coeffs().len() - 1)
    }

    pub fn eval(&self, d: &A) -> [A; 5] {
        self.equations.clone().map(|e| e.eval(d))
    }
}

pub fn pencil_coefficients<A: Algebra>(s: &SValues<A>, choice: &PencilChoice<A>) -> PencilCoefficients<A> {
    let a = &choice.alpha;
    let b = &choice.beta;
    let g = |m, n| s.get(m, n);
    let g1_p = g(1, 1).scaled_by(20).plus(&g(2, 0).times(b).scaled_by(10));
    let g1_q = g(3, 1).scaled_by(20).plus(&g(3, 0).times(a).scaled_by(10));
    let g1_xy = g(2, 1)
        .scaled_by(30)
        .plus(&g(2, 0).times(a).scaled_by(10))
        .plus(&g(3, 0).times(b).scaled_by(10));
    let g2_p = DPoly::linear(
        g(1, 2).scaled_by(30).plus(&a.times(&g1_p)).plus(&b.times(&g1_xy)),
        g(2, 0).scaled_by(-10),
    );
    let g2_q = DPoly::linear(
        g(2, 2).scaled_by(30).plus(&b.times(&g1_q)).plus(&a.times(&g1_xy)),
        g(3, 0).scaled_by(-10),
    );
    let g3 = g2_p
        .scale(a)
        .add(&g2_q.scale(b))
        .add(&DPoly::constant(g(1, 3).scaled_by(20)))
        .sub(&DPoly::constant(g1_xy.clone()).shift());
    PencilCoefficients {
        g1_p,
        g1_q,
        g1_xy,
        g2_p,
        g2_q,
        g3,
    }
}

/// E1..E5 for one pencil.
pub fn build_system<A: Algebra>(s: &SValues<A>, choice: &PencilChoice<A>) -> ConicSystem<A> {
    let c = pencil_coefficients(s, choice);
    let a = &choice.alpha;
    let b = &choice.beta;
    let k = |m, n, w| DPoly::constant(s.get(m, n).scaled_by(w));
    let e1 = k(0, 3, 10)
        .add(&c.g2_p.scale(b))
        .sub(&DPoly::constant(c.g1_p.clone()).shift());
    let e2 = k(2, 3, 10)
        .add(&c.g2_q.scale(a))
        .sub(&DPoly::constant(c.g1_q.clone()).shift());
    let e3 = k(0, 4, 5).add(&c.g3.scale(b)).sub(&c.g2_p.shift());
    let e4 = k(1, 4, 5).add(&c.g3.scale(a)).sub(&c.g2_q.shift());
    let e5 = k(0, 5, 1).sub(&c.g3.shift());
    ConicSystem {
        equations: [e1, e2, e3, e4, e5],
        coeffs: c,
        branch: choice.branch,
    }
}

/// f0, f1, f2 of the conic as d-polynomials: xy, −(βx + αy), d.
pub fn conic_form<A: Algebra>(choice: &PencilChoice<A>, x: &A, y: &A) -> [DPoly<A>; 3] {
    let l = choice.beta.times(x).plus(&choice.alpha.times(y));
    let z = x.zero_like();
    [
        DPoly::constant(x.times(y)),
        DPoly::constant(l.negated()),
        DPoly::linear(z, x.one_like()),
    ]
}

/// g0..g3 as binary forms in x, y with coefficients polynomial in d.
pub fn cubic_forms<A: Algebra>(
    s: &SValues<A>,
    choice: &PencilChoice<A>,
    coeffs: &PencilCoefficients<A>,
    x: &A,
    y: &A,
) -> [DPoly<A>; 4] {
    let k = s.get(2, 0).times(x).plus(&s.get(3, 0).times(y));
    let l = choice.beta.times(x).plus(&choice.alpha.times(y));
    let xy = x.times(y);
    let g0 = xy.times(&k).scaled_by(10);
    let g1 = x
        .times(x)
        .times(&s.get(1, 1))
        .scaled_by(20)
        .plus(&xy.times(&s.get(2, 1)).scaled_by(30))
        .plus(&y.times(y).times(&s.get(3, 1)).scaled_by(20))
        .plus(&k.times(&l).scaled_by(10));
    let g2 = coeffs.g2_p.scale(x).add(&coeffs.g2_q.scale(y));
    [DPoly::constant(g0), DPoly::constant(g1), g2, coeffs.g3.clone()]
}

/// Σ_{i+j=k} g_i f_j − F_k for k = 0..5.
pub fn recursion_residuals<A: Algebra>(s: &SValues<A>, choice: &PencilChoice<A>, x: &A, y: &A) -> [DPoly<A>; 6] {
    let coeffs = pencil_coefficients(s, choice);
    let g = cubic_forms(s, choice, &coeffs, x, y);
    let f = conic_form(choice, x, y);
    let fl = flambda_expand(s, x, y);
    std::array::from_fn(|k| {
        let mut acc = DPoly::constant(fl[k].negated());
        for (i, gi) in g.iter().enumerate() {
            if i <= k && k - i <= 2 {
                acc = acc.add(&gi.mul(&f[k - i]));
            }
        }
        acc
    })
}

/// Eliminates d through E1 (for E3, E5) and E2 (for E4), and returns the
/// compatibility condition of E1 and E2 as the fourth residual.
///
/// The d-coefficient of E1 is −20(S11 + S20 β), i.e. ∓20√Δ(R); when it
/// vanishes identically the generic route does not apply.
pub fn eliminate_d<A: Algebra>(sys: &ConicSystem<A>) -> Result<[A; 4], ConicError> {
    let [e1, e2, e3, e4, e5] = &sys.equations;
    if e1.coeff(1).is_zero_elem() {
        return Err(ConicError::DegeneratePencil("d does not occur in E1".into()));
    }
    if e2.coeff(1).is_zero_elem() {
        return Err(ConicError::DegeneratePencil("d does not occur in E2".into()));
    }
    let r1 = e3.eliminate_with_linear(e1);
    let r2 = e4.eliminate_with_linear(e2);
    let r3 = e5.eliminate_with_linear(e1);
    let r4 = e1.coeff(0).times(&e2.coeff(1)).minus(&e1.coeff(1).times(&e2.coeff(0)));
    Ok([r1, r2, r3, r4])
}

/// Coefficient identification over the formal frame, for every pencil.
///
/// For k ≤ 2 the residual vanishes identically. At k = 3 the xy-coefficient
/// is the definition of g3 and vanishes identically, while the x² and y²
/// coefficients are exactly −E1 and −E2; likewise k = 4 leaves −(E3 x + E4 y)
/// and k = 5 leaves −E5.
pub fn recursion_report(frame: &FormalFrame, pencils: usize) -> Report {
    let mut r = Report::new("coefficient recursion");
    let s = frame.s();
    let (x, y) = (&frame.x, &frame.y);
    for choice in frame.pencils.choices.iter().take(pencils) {
        let tag = choice.label();
        let res = recursion_residuals(s, choice, x, y);
        let sys = build_system(s, choice);
        let [e1, e2, e3, e4, e5] = &sys.equations;
        for (k, rk) in res.iter().enumerate().take(3) {
            r.check(format!("{tag}: sum g_i f_j - F_{k} = 0"), rk.is_zero(), "");
        }
        let xy = x.times(y);
        let xx = x.times(x);
        let yy = y.times(y);
        let in_ideal3 = e1.scale(&xx).add(&e2.scale(&yy));
        // the xy part: subtract the E-part and what is left must be zero
        let xy_coeff = res[3].map(|c| frame.partial_y(&frame.partial_x(c)));
        r.check(
            format!("{tag}: sum g_i f_j - F_3 has zero xy-coefficient"),
            xy_coeff.is_zero(),
            "",
        );
        r.check(
            format!("{tag}: sum g_i f_j - F_3 = -(E1 x^2 + E2 y^2)"),
            res[3].add(&in_ideal3).is_zero() && !in_ideal3.is_zero(),
            "",
        );
        let in_ideal4 = e3.scale(x).add(&e4.scale(y));
        r.check(
            format!("{tag}: sum g_i f_j - F_4 = -(E3 x + E4 y)"),
            res[4].add(&in_ideal4).is_zero(),
            "",
        );
        r.check(format!("{tag}: sum g_i f_j - F_5 = -E5"), res[5].add(e5).is_zero(), "");
        // g2 from second derivatives
        let coeffs = &sys.coeffs;
        let g = cubic_forms(s, choice, coeffs, x, y);
        let fl = flambda_expand(s, x, y);
        let l = choice.beta.times(x).plus(&choice.alpha.times(y));
        let dxy = |a: &QAlphaBeta| frame.partial_y(&frame.partial_x(a));
        let g1 = g[1].coeff(0);
        let g0 = g[0].coeff(0);
        let closed = DPoly::constant(
            dxy(&fl[2])
                .plus(&choice.alpha.times(&frame.partial_x(&g1)))
                .plus(&choice.beta.times(&frame.partial_y(&g1)))
                .plus(&l.times(&dxy(&g1))),
        )
        .sub(&DPoly::constant(dxy(&g0)).shift());
        r.check(
            format!("{tag}: 2 g2 = F2_xy + alpha g1_x + beta g1_y + l g1_xy - d g0_xy"),
            g[2].scale(&xy.from_i64_like(2)) == closed,
            "",
        );
        r.check(
            format!("{tag}: g1_xy = 30 S21 + 10 S20 alpha + 10 S30 beta"),
            dxy(&g1).minus(&coeffs.g1_xy).is_zero_elem(),
            "",
        );
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Fp;
    use crate::scalar::Scalar;

    #[test]
    fn recursion_on_principal_pencil() {
        let f = FormalFrame::new();
        let r = recursion_report(&f, 1);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn degrees_and_tau() {
        let f = FormalFrame::new();
        let sys = build_system(f.s(), f.principal());
        assert_eq!(sys.degree_profile(), [1, 1, 2, 2, 2]);
        for e in &sys.equations {
            assert_eq!(e.degree(), Some(e.coeffs().len() - 1));
        }
        let [e1, e2, e3, e4, e5] = &sys.equations;
        assert_eq!(&f.tau_dpoly(e1), e2);
        assert_eq!(&f.tau_dpoly(e3), e4);
        assert_eq!(&f.tau_dpoly(e5), e5);
    }

    #[test]
    fn elimination_over_fp_matches_back_substitution() {
        let p = 1009;
        let mut tried = 0;
        for seed in 1..200i64 {
            let s = SValues::from_fn(Fp::new(0, p), |m, n| {
                if super::super::ZERO_KEYS.contains(&(m, n)) {
                    Fp::new(0, p)
                } else {
                    Fp::new(seed * seed * (m as i64 + 2) + 31 * n as i64 + seed, p)
                }
            });
            let Ok(ch) = crate::conicsystem::pencil_roots_fp(&s) else {
                continue;
            };
            tried += 1;
            let sys = build_system(&s, &ch[0]);
            let [e1, e2, ..] = &sys.equations;
            let d = -e1.coeff(0) * e1.coeff(1).inv().unwrap();
            let vals = sys.eval(&d);
            let r = eliminate_d(&sys).unwrap();
            let c1 = e1.coeff(1);
            // R1 = E3(d) c1^2, R3 = E5(d) c1^2, R4 = -E2(d) c1
            assert_eq!(r[0], vals[2] * c1 * c1);
            assert_eq!(r[2], vals[4] * c1 * c1);
            assert_eq!(r[3], -(vals[1] * c1));
            let d2 = -e2.coeff(0) * e2.coeff(1).inv().unwrap();
            let c2 = e2.coeff(1);
            assert_eq!(r[1], sys.eval(&d2)[3] * c2 * c2);
        }
        assert!(tried > 10);
    }
}

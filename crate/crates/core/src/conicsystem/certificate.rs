//! Explicit factorization f·g = F_Λ over a field.

use crate::algebra::Algebra;
use crate::conicsystem::system::pencil_coefficients;
use crate::conicsystem::{conic_form, cubic_forms, flambda_expand, ConicError, PencilChoice, SValues};
use crate::monomial::Monomial;
use crate::monomial::Vars;
use crate::poly::MultiPoly;
use crate::resultant::resultant;
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct SectionFactorization<C: Scalar> {
    /// f = xy − (βx + αy) z + d z²
    pub conic: MultiPoly<C>,
    pub cubic: MultiPoly<C>,
    pub flambda: MultiPoly<C>,
    pub d: C,
    /// λ = αβ − d
    pub lambda: C,
    /// resultant of f and g in z
    pub resultant: MultiPoly<C>,
    /// resultant / (xy), when g has degree 3 in z
    pub residual_quartic: Option<MultiPoly<C>>,
}

/// Builds f and g for the given pencil and d over x, y, z and checks
/// f·g = F_Λ by multiplication.
pub fn factor_certificate<C: Scalar + Algebra>(
    s: &SValues<C>,
    choice: &PencilChoice<C>,
    d: &C,
) -> Result<SectionFactorization<C>, ConicError> {
    let dom = s.zero().domain();
    let vars = Vars::new(&["x", "y", "z"]);
    let g = MultiPoly::gens(&vars, &dom);
    let (x, y, z) = (&g[0], &g[1], &g[2]);
    let lift = |c: &C| MultiPoly::constant(&vars, &dom, c.clone());
    let sp = s.map(MultiPoly::zero(&vars, &dom), lift);
    let ch = PencilChoice {
        alpha: lift(&choice.alpha),
        beta: lift(&choice.beta),
        branch: choice.branch,
    };
    let dp = lift(d);
    let coeffs = pencil_coefficients(&sp, &ch);
    let gk = cubic_forms(&sp, &ch, &coeffs, x, y);
    let fk = conic_form(&ch, x, y);
    let fl = flambda_expand(&sp, x, y);
    let horner = |parts: Vec<MultiPoly<C>>| parts.iter().rev().fold(x.zero_like(), |acc, p| &(&acc * z) + p);
    let conic = horner(fk.iter().map(|p| p.eval(&dp)).collect());
    let cubic = horner(gk.iter().map(|p| p.eval(&dp)).collect());
    let flambda = horner(fl.to_vec());
    let diff = &(&conic * &cubic) - &flambda;
    if !diff.is_zero() {
        return Err(ConicError::CertificateFailure {
            difference: diff.abbreviated(6),
        });
    }
    let res = resultant(&conic, &cubic, 2)?;
    let residual_quartic = if cubic.degree_in(2) == 3 {
        Some(res.div_exact(&(x * y)).map_err(|e| ConicError::CertificateFailure {
            difference: format!("resultant not divisible by xy: {e}"),
        })?)
    } else {
        None
    };
    let lambda = choice.alpha.times(&choice.beta).minus(d);
    Ok(SectionFactorization {
        conic,
        cubic,
        flambda,
        d: d.clone(),
        lambda,
        resultant: res,
        residual_quartic,
    })
}

impl<C: Scalar> SectionFactorization<C> {
    /// f(1,0,0) and f(0,1,0).
    pub fn passes_through_p_and_q(&self) -> bool {
        let dom = self.conic.domain().clone();
        let o = C::from_i64_in(&dom, 1);
        let z = C::from_i64_in(&dom, 0);
        self.conic.eval(&[o.clone(), z.clone(), z.clone()]).is_zero() && self.conic.eval(&[z.clone(), o, z]).is_zero()
    }
}

/// Reads S_mn off a plane quintic in x, y, z: the coefficient of
/// x^l y^j z^k is 5!/(l! j! k!) S_jk. The coefficients that must vanish for
/// a section singular at P and Q are checked.
pub fn svalues_from_quintic<C: Scalar + Algebra>(f: &MultiPoly<C>) -> Result<SValues<C>, ConicError> {
    if f.vars().len() != 3 || !f.is_homogeneous() || f.degree() != 5 {
        return Err(ConicError::InvalidFrame("expected a quintic form in x, y, z".into()));
    }
    let dom = f.domain().clone();
    let fact = |n: u32| (1..=n as i64).product::<i64>();
    let s = SValues::from_fn(C::from_i64_in(&dom, 0), |j, k| {
        let l = 5 - j - k;
        let c = f.coefficient(&Monomial::from_exps(&[l as u16, j as u16, k as u16]));
        let w = fact(5) / (fact(l) * fact(j) * fact(k));
        c * C::from_i64_in(&dom, w).inv().expect("weights are units")
    });
    let bad = s.nonvanishing_zero_keys();
    if !bad.is_empty() {
        return Err(ConicError::InvalidFrame(format!(
            "section not singular at P and Q: S{}{} != 0",
            bad[0].0, bad[0].1
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conicsystem::{build_system, pencil_roots_fp, ZERO_KEYS};
    use crate::fp::Fp;
    use rand::SeedableRng;

    #[test]
    fn planted_factorization_is_recovered() {
        let p = 10007;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let vars = Vars::new(&["x", "y", "z"]);
        let g = MultiPoly::<Fp>::gens(&vars, &p);
        let (x, y, z) = (&g[0], &g[1], &g[2]);
        let mut found = 0;
        for _ in 0..20 {
            let mut r = || MultiPoly::constant(&vars, &p, Fp::random(&mut rng, p));
            let (a, b, d) = (r(), r(), r());
            let conic = &(&(x * y) - &(&(&(&b * x) + &(&a * y)) * z)) + &(&d * &z.square());
            let g0 = &(x * y) * &(&(&r() * x) + &(&r() * y));
            let g1 = &(&(&r() * &x.square()) + &(&r() * &(x * y))) + &(&r() * &y.square());
            let g2 = &(&r() * x) + &(&r() * y);
            let cubic = &(&(&g0 + &(&g1 * z)) + &(&g2 * &z.square())) + &(&r() * &z.pow(3));
            let f = &conic * &cubic;
            let s = svalues_from_quintic(&f).unwrap();
            let Ok(ch) = pencil_roots_fp(&s) else { continue };
            let (av, bv, dv) = (a.constant_term(), b.constant_term(), d.constant_term());
            let hit: Vec<_> = ch.iter().filter(|c| c.alpha == av && c.beta == bv).collect();
            assert_eq!(hit.len(), 1);
            let sys = build_system(&s, hit[0]);
            assert!(sys.eval(&dv).iter().all(|e| e.value() == 0));
            let cert = factor_certificate(&s, hit[0], &dv).unwrap();
            assert_eq!(cert.conic, conic);
            assert_eq!(cert.cubic, cubic);
            assert!(cert.passes_through_p_and_q());
            let q = cert.residual_quartic.unwrap();
            assert!(q.is_homogeneous() && q.degree() == 4 && q.degree_in(2) == 0);
            found += 1;
        }
        assert!(found >= 3);
    }

    #[test]
    fn wrong_d_fails() {
        let p = 101;
        let s = SValues::from_fn(Fp::new(0, p), |m, n| {
            if ZERO_KEYS.contains(&(m, n)) {
                Fp::new(0, p)
            } else {
                Fp::new((m * 7 + n * 3 + 1) as i64, p)
            }
        });
        if let Ok(ch) = pencil_roots_fp(&s) {
            let sys = build_system(&s, &ch[0]);
            let d = Fp::new(5, p);
            if sys.eval(&d).iter().any(|e| e.value() != 0) {
                assert!(matches!(
                    factor_certificate(&s, &ch[0], &d),
                    Err(ConicError::CertificateFailure { .. })
                ));
            }
        }
    }
}

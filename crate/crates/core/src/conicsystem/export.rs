//! The system E1..E5 of a built-in frame, with denominators cleared, ready
//! for serialization.

use serde_json::{json, Value};

use crate::conicsystem::{
    build_system, eliminate_d, formal_to_poly, pencil_roots, ConicError, DPoly, SValues, SimplexFrame,
};
use crate::json::poly_to_value;
use crate::monomial::Vars;
use crate::symfun::{e_to_u, e_vars, kernel};
use crate::{QPoly, QRatFunc};

/// Each entry is numerator / denominator over e1..e5, alpha, beta, d.
#[derive(Debug, Clone)]
pub struct FrameExport {
    pub vars: Vars,
    pub branch: (i8, i8),
    /// S30 alpha^2 + 2 S31 alpha + S32 and S20 beta^2 + 2 S11 beta + S02
    pub root_relations: [QPoly; 2],
    pub equations: Vec<(QPoly, QPoly)>,
    pub residuals: Option<Vec<(QPoly, QPoly)>>,
}

/// Builds the principal pencil's system for `frame` over the e-ring.
pub fn export_frame_system(frame: &SimplexFrame, eliminate: bool) -> Result<FrameExport, ConicError> {
    let ev = e_vars();
    let table = frame.s_values();
    let base: SValues<QRatFunc> = table.map(QRatFunc::zero(&ev, &()), |p| QRatFunc::from_poly(p.clone()));
    let pencils = pencil_roots(&base)?;
    let choice = &pencils.choices[0];
    let sys = build_system(&pencils.s, choice);
    let equations: Vec<(QPoly, QPoly)> = sys.equations.iter().map(|e| formal_to_poly(e, &ev)).collect();
    let residuals = if eliminate {
        let r = eliminate_d(&sys)?;
        Some(
            r.iter()
                .map(|ri| formal_to_poly(&DPoly::constant(ri.clone()), &ev))
                .collect(),
        )
    } else {
        None
    };
    let vars = equations[0].0.vars().clone();
    let g = QPoly::gens(&vars, &());
    let (a, b) = (&g[5], &g[6]);
    let s = |m, n| table.get(m, n).embed(&vars).expect("e-ring embeds");
    let two = crate::Rational::from(2);
    let rel_a = &(&(&s(3, 0) * &a.square()) + &(&s(3, 1) * a).scale(&two)) + &s(3, 2);
    let rel_b = &(&(&s(2, 0) * &b.square()) + &(&s(1, 1) * b).scale(&two)) + &s(0, 2);
    Ok(FrameExport {
        vars,
        branch: choice.branch,
        root_relations: [rel_a, rel_b],
        equations,
        residuals,
    })
}

fn pair(p: &(QPoly, QPoly)) -> Value {
    json!({ "numerator": poly_to_value(&p.0), "denominator": poly_to_value(&p.1) })
}

impl FrameExport {
    /// Polynomials use the `{"vars", "terms"}` schema; `e_in_u` gives each
    /// e_k as a polynomial in u0..u4.
    pub fn to_json(&self) -> Value {
        let k = kernel();
        let e_in_u: Vec<Value> = (1..=5)
            .map(|j| poly_to_value(&e_to_u(&crate::symfun::e_symbol(j), &k.esym)))
            .collect();
        json!({
            "vars": self.vars.names(),
            "branch": [self.branch.0, self.branch.1],
            "e_in_u": e_in_u,
            "root_relations": self.root_relations.iter().map(poly_to_value).collect::<Vec<_>>(),
            "equations": self.equations.iter().map(pair).collect::<Vec<_>>(),
            "residuals": self.residuals.as_ref().map(|r| r.iter().map(pair).collect::<Vec<_>>()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conicsystem::pencil_roots_fp;
    use crate::{Fp, FpPoly, Rational, Scalar};
    use rand::SeedableRng;

    fn to_fp(p: &QPoly, m: u64) -> FpPoly {
        p.map_coeffs(&m, |c: &Rational| {
            Fp::from_ratio_in(&m, &c.numer(), &c.denom()).unwrap()
        })
    }

    #[test]
    fn export_agrees_with_the_numeric_system() {
        let p = 1_000_003u64;
        let frame = SimplexFrame::option1(5);
        let ex = export_frame_system(&frame, true).unwrap();
        assert_eq!(ex.vars.names()[5..], ["alpha", "beta", "d"]);
        let table = frame.s_values();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let mut checked = 0;
        while checked < 3 {
            let e: Vec<Fp> = (0..5).map(|_| Fp::random(&mut rng, p)).collect();
            let s = table.map(Fp::new(0, p), |q| to_fp(q, p).eval(&e));
            let Ok(choices) = pencil_roots_fp(&s) else { continue };
            let c = &choices[0];
            let d = Fp::random(&mut rng, p);
            let mut point = e.clone();
            point.extend([c.alpha, c.beta, d]);
            let val = |(n, dn): &(QPoly, QPoly)| to_fp(n, p).eval(&point) * to_fp(dn, p).eval(&point).inv().unwrap();
            let sys = build_system(&s, c);
            for (k, want) in sys.eval(&d).iter().enumerate() {
                assert_eq!(val(&ex.equations[k]), *want, "E{}", k + 1);
            }
            let res = eliminate_d(&sys).unwrap();
            for (k, want) in res.iter().enumerate() {
                assert_eq!(val(&ex.residuals.as_ref().unwrap()[k]), *want, "R{}", k + 1);
            }
            for rel in &ex.root_relations {
                assert_eq!(to_fp(rel, p).eval(&point).value(), 0);
            }
            checked += 1;
        }
    }
}

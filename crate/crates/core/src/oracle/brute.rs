//! Exhaustive search for conic factors through P = [1:0:0] and Q = [0:1:0].

use rayon::prelude::*;
use serde::Serialize;

use crate::fp::Fp;
use crate::linalg::rank;
use crate::monomial::{Monomial, Vars};
use crate::oracle::{OracleError, SectionInstance};
use crate::FpPoly;

/// Largest prime for full enumeration.
pub const ENUMERATION_BOUND: u64 = 101;

/// Local intersection number of the conic and the cubic at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Contact {
    Finite(u32),
    /// the cubic contains the conic
    CommonComponent,
}

/// f = a xy + b xz + c yz + d z², normalized so the first nonzero of
/// (a, b, c, d) is 1.
#[derive(Debug, Clone, Serialize)]
pub struct ConicFactor {
    pub conic: [u64; 4],
    #[serde(skip)]
    pub cubic: FpPoly,
    /// rank ≤ 2, i.e. a(bc − ad) = 0
    pub degenerate: bool,
    /// a = 0: f contains the line PQ
    pub contains_line_pq: bool,
    /// at P and Q; only computed when a = 1
    pub contact: Option<[Contact; 2]>,
}

impl ConicFactor {
    /// The key of the conic after x ↔ y, renormalized.
    pub fn swapped_key(&self, p: u64) -> [u64; 4] {
        let [a, b, c, d] = self.conic;
        let k = [a, c, b, d];
        let lead = k.iter().copied().find(|&v| v != 0).expect("nonzero conic");
        let inv = inv_mod(lead, p);
        k.map(|v| v * inv % p)
    }
}

fn conic_terms(k: [u64; 4]) -> [([u16; 3], u64); 4] {
    [
        ([1, 1, 0], k[0]),
        ([1, 0, 1], k[1]),
        ([0, 1, 1], k[2]),
        ([0, 0, 2], k[3]),
    ]
}

fn conic_poly(k: [u64; 4], p: u64) -> FpPoly {
    let vars = Vars::new(&["x", "y", "z"]);
    let terms = conic_terms(k)
        .iter()
        .map(|(e, c)| (Monomial::from_exps(e), Fp::from_u64(*c, p)))
        .collect();
    FpPoly::from_terms(&vars, &p, terms)
}

fn monomials(deg: u16) -> Vec<[u16; 3]> {
    let mut out = Vec::new();
    for i in (0..=deg).rev() {
        for j in (0..=deg - i).rev() {
            out.push([i, j, deg - i - j]);
        }
    }
    out
}

/// Decides f | F by comparing rank A with rank [A | F], where A maps the
/// ten cubic coefficients of g to the coefficients of f·g.
fn divides_by_rank(k: [u64; 4], f: &FpPoly, p: u64) -> bool {
    let quintics = monomials(5);
    let cubics = monomials(3);
    let idx = |e: [u16; 3]| quintics.iter().position(|q| *q == e).expect("quintic monomial");
    let zero = Fp::from_u64(0, p);
    let mut a = vec![vec![zero; cubics.len() + 1]; quintics.len()];
    for (col, m) in cubics.iter().enumerate() {
        for (e, c) in conic_terms(k) {
            let row = idx([m[0] + e[0], m[1] + e[1], m[2] + e[2]]);
            a[row][col] = a[row][col] + Fp::from_u64(c, p);
        }
    }
    for (row, q) in quintics.iter().enumerate() {
        a[row][cubics.len()] = f.coefficient(&Monomial::from_exps(q));
    }
    let bare: Vec<Vec<Fp>> = a.iter().map(|r| r[..cubics.len()].to_vec()).collect();
    rank(&bare) == rank(&a)
}

/// z-adic valuation of g(1, y(z), z)(1 + cz)^3 with y = −z(b + dz)/(1 + cz)
/// on the conic xy + bxz + cyz + dz² = 0; this is the resultant in y up to a
/// unit, so its valuation is the intersection number at [1:0:0].
fn contact_at_p(g: &FpPoly, b: u64, c: u64, d: u64, p: u64) -> Contact {
    let mulp = |u: &[u64], v: &[u64]| {
        let mut out = vec![0u64; u.len() + v.len() - 1];
        for (i, x) in u.iter().enumerate() {
            for (j, y) in v.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        out
    };
    let pw = |u: &[u64], e: u16| (0..e).fold(vec![1u64], |acc, _| mulp(&acc, u));
    let num = [0, (p - b) % p, (p - d) % p];
    let den = [1, c];
    let mut h = vec![0u64; 8];
    for (m, coef) in g.terms() {
        let (j, k) = (m.exp(1), m.exp(2));
        // y^j z^k x^(3-j-k) at x = 1, times (1 + cz)^3
        let t = mulp(&mulp(&pw(&num, j), &pw(&den, 3 - j)), &pw(&[0, 1], k));
        for (i, v) in t.iter().enumerate() {
            h[i] = (h[i] + v * coef.value()) % p;
        }
    }
    match h.iter().position(|&v| v != 0) {
        Some(i) => Contact::Finite(i as u32),
        None => Contact::CommonComponent,
    }
}

/// Coefficients of F(x, y0, 1) in x for each y0.
fn slices(f: &FpPoly, p: u64) -> Vec<[u64; 6]> {
    let terms: Vec<(u16, u16, u64)> = f.terms().iter().map(|(m, c)| (m.exp(0), m.exp(1), c.value())).collect();
    (0..p)
        .map(|y0| {
            let mut out = [0u64; 6];
            for &(i, j, c) in &terms {
                let mut v = c;
                for _ in 0..j {
                    v = v * y0 % p;
                }
                out[i as usize] = (out[i as usize] + v) % p;
            }
            out
        })
        .collect()
}

fn horner(c: &[u64; 6], x: u64, p: u64) -> u64 {
    c.iter().rev().fold(0, |acc, v| (acc * x + v) % p)
}

fn inv_mod(v: u64, p: u64) -> u64 {
    Fp::from_u64(v, p).pow(p - 2).value()
}

fn factor(k: [u64; 4], f: &FpPoly, p: u64) -> Option<ConicFactor> {
    let conic = conic_poly(k, p);
    if !divides_by_rank(k, f, p) {
        return None;
    }
    let cubic = f.div_exact(&conic).ok()?;
    let [a, b, c, d] = k;
    let degenerate = a == 0 || (b * c + p * p - a * d) % p == 0;
    let contact = (a == 1).then(|| {
        let swapped = cubic
            .compose(&[
                FpPoly::var(cubic.vars(), &p, 1),
                FpPoly::var(cubic.vars(), &p, 0),
                FpPoly::var(cubic.vars(), &p, 2),
            ])
            .expect("same ring");
        [contact_at_p(&cubic, b, c, d, p), contact_at_p(&swapped, c, b, d, p)]
    });
    Some(ConicFactor {
        conic: k,
        cubic,
        degenerate,
        contains_line_pq: a == 0,
        contact,
    })
}

/// All factorizations F_Λ = f·g with f a conic through P and Q, sorted by
/// (a, b, c, d) descending in a.
pub fn brute_force_conics(inst: &SectionInstance) -> Result<Vec<ConicFactor>, OracleError> {
    inst.validate()?;
    conic_factors(&inst.flambda())
}

/// All factorizations f·g of a ternary quintic over F_p with f a conic
/// through [1:0:0] and [0:1:0].
pub fn conic_factors(f: &FpPoly) -> Result<Vec<ConicFactor>, OracleError> {
    let p = *f.domain();
    if p > ENUMERATION_BOUND {
        return Err(OracleError::PrimeTooLarge {
            prime: p,
            bound: ENUMERATION_BOUND,
        });
    }
    if f.vars().len() != 3 || !f.is_homogeneous() || f.degree() != 5 {
        return Err(OracleError::InvalidInstance("expected a ternary quintic".into()));
    }
    let f = f.clone();
    let sl = slices(&f, p);
    let inv2 = inv_mod(2, p);
    // a = 1. The conic is (x + c)(y + b) = cb − d at z = 1, so for y0 + b = s
    // the point x = (cb − d)/s − c lies on it and F must vanish there.
    let mut found: Vec<ConicFactor> = (0..p)
        .into_par_iter()
        .flat_map_iter(|b| {
            let f = &f;
            let sl = &sl;
            let probes: Vec<(u64, u64)> = [(1, 1), (p - 1, p - 1), (2, inv2)]
                .iter()
                .map(|&(s, sinv)| ((s + p - b) % p, sinv))
                .collect();
            (0..p).flat_map(move |c| {
                let probes = probes.clone();
                (0..p).filter_map(move |d| {
                    let w = (c * b + p - d) % p;
                    let vanishes = probes
                        .iter()
                        .all(|&(y0, sinv)| horner(&sl[y0 as usize], (w * sinv + p - c) % p, p) == 0);
                    if vanishes {
                        factor([1, b, c, d], f, p)
                    } else {
                        None
                    }
                })
            })
        })
        .collect();
    // a = 0: f = z·(bx + cy + dz) needs z | F
    let z_divides = f.terms().iter().all(|(m, _)| m.exp(2) > 0);
    if z_divides {
        let mut cands = vec![[0, 0, 0, 1]];
        cands.extend((0..p).map(|d| [0, 0, 1, d]));
        cands.extend((0..p).flat_map(|c| (0..p).map(move |d| [0, 1, c, d])));
        found.extend(
            cands
                .into_par_iter()
                .filter_map(|k| factor(k, &f, p))
                .collect::<Vec<_>>(),
        );
    }
    found.sort_by(|u, v| v.conic[0].cmp(&u.conic[0]).then(u.conic.cmp(&v.conic)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_test_matches_division() {
        let p = 13;
        let vars = Vars::new(&["x", "y", "z"]);
        let g = FpPoly::gens(&vars, &p);
        let k = [1, 2, 3, 4];
        let f = conic_poly(k, p);
        let cubic =
            &(&g[0].pow(3) + &g[1].pow(2).mul_term(&Monomial::from_exps(&[0, 0, 1]), &Fp::new(5, p))) + &g[2].pow(3);
        let prod = &f * &cubic;
        assert!(divides_by_rank(k, &prod, p));
        assert!(!divides_by_rank([1, 2, 3, 5], &prod, p));
    }

    #[test]
    fn planted_factorization_is_recovered() {
        let p = 23;
        let vars = Vars::new(&["x", "y", "z"]);
        let g = FpPoly::gens(&vars, &p);
        let k = [1, 2, 3, 4];
        let f = conic_poly(k, p);
        let cubic = &(&(&g[0].pow(3) + &g[1].pow(3)) + &g[2].pow(3)) + &(&(&g[0] * &g[1]) * &g[2]);
        let found = conic_factors(&(&f * &cubic)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].conic, k);
        assert_eq!(found[0].cubic, cubic);
        assert!(!found[0].degenerate);
    }

    #[test]
    fn contact_of_tangent_cubic() {
        let p = 31;
        let vars = Vars::new(&["x", "y", "z"]);
        let g = FpPoly::gens(&vars, &p);
        // conic xy + z^2 (b = c = 0, d = 1): near P, y = -z^2
        // cubic x^2 y has contact 2, x^2 z has contact 1, x y z has contact 3
        let x2 = g[0].pow(2);
        assert_eq!(contact_at_p(&(&x2 * &g[1]), 0, 0, 1, p), Contact::Finite(2));
        assert_eq!(contact_at_p(&(&x2 * &g[2]), 0, 0, 1, p), Contact::Finite(1));
        assert_eq!(
            contact_at_p(&(&(&g[0] * &g[1]) * &g[2]), 0, 0, 1, p),
            Contact::Finite(3)
        );
        let conic = &(&g[0] * &g[1]) + &g[2].pow(2);
        assert_eq!(contact_at_p(&(&conic * &g[0]), 0, 0, 1, p), Contact::CommonComponent);
    }
}

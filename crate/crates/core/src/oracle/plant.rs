//! Rational curves t ↦ [c_i Π_j (t − r_ij)] on members of the Dwork pencil
//! over F_p, built from scratch so that dwork_cover_solve has a known answer.
//!
//! Both builders need x ↦ x^5 to be a bijection of F_p, i.e. 5 ∤ p − 1.

use rand::Rng;

use crate::fp::Fp;
use crate::linalg::{nullspace, rank};
use crate::monomial::Vars;
use crate::oracle::OracleError;
use crate::FpPoly;

#[derive(Debug, Clone)]
pub struct PlantedCurve {
    pub prime: u64,
    pub psi: Fp,
    /// roots[i] are the roots of coordinate i
    pub roots: Vec<Vec<Fp>>,
    /// [c_i^5] scaled so that the first entry is 1
    pub c5: Vec<Fp>,
    /// the coordinate polynomials in t
    pub coords: Vec<FpPoly>,
}

impl PlantedCurve {
    /// Σ x_i(t)^5 − 5ψ Π x_i(t) vanishes identically.
    pub fn lies_on_dwork_quintic(&self) -> bool {
        let p = self.prime;
        let fermat = self
            .coords
            .iter()
            .fold(self.coords[0].zero_like(), |a, x| &a + &x.pow(5));
        let prod = self.coords.iter().fold(self.coords[0].one_like(), |a, x| &a * x);
        (&fermat - &prod.scale(&(Fp::new(5, p) * self.psi))).is_zero()
    }
}

fn check_prime(p: u64) -> Result<(), OracleError> {
    if !crate::fp::is_prime(p) || p <= 5 {
        return Err(OracleError::BadPrime(p));
    }
    if (p - 1) % 5 == 0 {
        return Err(OracleError::InvalidInstance(format!(
            "fifth roots are not unique mod {p}"
        )));
    }
    Ok(())
}

fn fifth_root(v: Fp) -> Fp {
    v.roots(5)[0]
}

fn normalized(w: &[Fp]) -> Vec<Fp> {
    let inv = w[0].pow(w[0].modulus() - 2);
    w.iter().map(|x| *x * inv).collect()
}

fn distinct(roots: &[Vec<Fp>]) -> bool {
    let mut all: Vec<u64> = roots.iter().flatten().map(Fp::value).collect();
    let n = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == n
}

fn tvar(p: u64) -> FpPoly {
    FpPoly::var(&Vars::new(&["t"]), &p, 0)
}

/// Coefficients of (t − r)^5 in degrees 0..=5.
fn fifth_power_coeffs(r: Fp) -> Vec<Fp> {
    let p = r.modulus();
    let binom = [1, 5, 10, 10, 5, 1];
    (0..6).map(|k| Fp::new(binom[k], p) * (-r).pow(5 - k as u64)).collect()
}

/// Coefficients of Π (t − r_i) in degrees 0..=5.
fn product_coeffs(rs: &[Fp]) -> Vec<Fp> {
    let p = rs[0].modulus();
    let mut c = vec![Fp::new(1, p)];
    for r in rs {
        let mut next = vec![Fp::new(0, p); c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k + 1] = next[k + 1] + *v;
            next[k] = next[k] - *v * *r;
        }
        c = next;
    }
    c
}

/// A line x_i = c_i (t − r_i) through random distinct roots. The 6×6
/// system Σ w_i (t − r_i)^5 = κ Π (t − r_i) in (w, κ) is always singular
/// (the 5×5 matrix (r_a − r_i)^5 is antisymmetric), so any five roots carry
/// a line on some X_ψ; c_i = w_i^(1/5) and ψ = κ / (5 Π c_i).
pub fn plant_line<R: Rng + ?Sized>(rng: &mut R, p: u64) -> Result<PlantedCurve, OracleError> {
    check_prime(p)?;
    loop {
        let rs: Vec<Fp> = (0..5).map(|_| Fp::random(rng, p)).collect();
        if !distinct(&rs.iter().map(|r| vec![*r]).collect::<Vec<_>>()) {
            continue;
        }
        let mut cols: Vec<Vec<Fp>> = rs.iter().map(|r| fifth_power_coeffs(*r)).collect();
        cols.push(product_coeffs(&rs).iter().map(|v| -*v).collect());
        let m: Vec<Vec<Fp>> = (0..6).map(|k| cols.iter().map(|c| c[k]).collect()).collect();
        let ker = nullspace(&m, 6, &p);
        if ker.len() != 1 || ker[0][..5].iter().any(|w| w.value() == 0) {
            continue;
        }
        let w = &ker[0];
        let c: Vec<Fp> = w[..5].iter().map(|v| fifth_root(*v)).collect();
        let prod_c = c.iter().fold(Fp::new(1, p), |a, v| a * *v);
        let psi = w[5] * (Fp::new(5, p) * prod_c).pow(p - 2);
        let t = tvar(p);
        let coords = (0..5).map(|i| (&t - &t.constant_like(rs[i])).scale(&c[i])).collect();
        return Ok(PlantedCurve {
            prime: p,
            psi,
            roots: rs.iter().map(|r| vec![*r]).collect(),
            c5: normalized(&w[..5]),
            coords,
        });
    }
}

/// A conic on the Fermat quintic: on the plane x1 = b² s − x0,
/// x3 = a² s − x2, x4 = b c s with a^10 + b^10 = 4 b^5 c^5, F restricts to
/// (5/4) s (b² q0² + a² q1²) where q0 = x0² + x1², q1 = x2² + x3², so
/// b q0 + i a q1 = 0 is a conic on X. It is parametrized through a rational
/// point and kept when the ten coordinate roots are distinct and rational.
pub fn plant_conic<R: Rng + ?Sized>(rng: &mut R, p: u64) -> Result<PlantedCurve, OracleError> {
    check_prime(p)?;
    let i = Fp::new(-1, p)
        .sqrt()
        .ok_or_else(|| OracleError::InvalidInstance(format!("-1 is not a square mod {p}")))?;
    let t = tvar(p);
    let two = Fp::new(2, p);
    let half = two.pow(p - 2);
    loop {
        let b = Fp::random(rng, p);
        let c = Fp::random(rng, p);
        let v = Fp::new(4, p) * b.pow(5) * c.pow(5) - b.pow(10);
        if b.value() == 0 || c.value() == 0 || v.value() == 0 {
            continue;
        }
        let a2 = fifth_root(v);
        let Some(a) = a2.sqrt() else {
            continue;
        };
        // plane coordinates (x0, x2, s)
        let form = |u: [Fp; 3]| {
            let x1 = b * b * u[2] - u[0];
            let x3 = a2 * u[2] - u[1];
            b * (u[0] * u[0] + x1 * x1) + i * a * (u[1] * u[1] + x3 * x3)
        };
        let unit = |k: usize| -> [Fp; 3] { std::array::from_fn(|j| Fp::new((j == k) as i64, p)) };
        let mut g = [[Fp::new(0, p); 3]; 3];
        for j in 0..3 {
            for k in 0..3 {
                let sum: [Fp; 3] = std::array::from_fn(|m| unit(j)[m] + unit(k)[m]);
                g[j][k] = if j == k {
                    form(unit(j))
                } else {
                    (form(sum) - form(unit(j)) - form(unit(k))) * half
                };
            }
        }
        if rank(&g.iter().map(|r| r.to_vec()).collect::<Vec<_>>()) < 3 {
            continue;
        }
        // a rational point with s = 1
        let x0 = Fp::random(rng, p);
        let one = Fp::new(1, p);
        let qa = g[1][1];
        let qb = two * (g[0][1] * x0 + g[1][2]);
        let qc = g[0][0] * x0 * x0 + two * g[0][2] * x0 + g[2][2];
        if qa.value() == 0 {
            continue;
        }
        let Some(sq) = (qb * qb - Fp::new(4, p) * qa * qc).sqrt() else {
            continue;
        };
        let v0 = [x0, (sq - qb) * (two * qa).pow(p - 2), one];
        // w(t) = t e1 + e2; the second intersection is Q(w) v0 − 2 B(v0, w) w
        let e1: [Fp; 3] = std::array::from_fn(|_| Fp::random(rng, p));
        let e2: [Fp; 3] = std::array::from_fn(|_| Fp::random(rng, p));
        if rank(&[v0.to_vec(), e1.to_vec(), e2.to_vec()]) < 3 {
            continue;
        }
        let w: Vec<FpPoly> = (0..3).map(|m| &t.scale(&e1[m]) + &t.constant_like(e2[m])).collect();
        let mut qw = t.zero_like();
        let mut bw = t.zero_like();
        for j in 0..3 {
            for k in 0..3 {
                qw = &qw + &(&w[j] * &w[k]).scale(&g[j][k]);
                bw = &bw + &w[k].scale(&(g[j][k] * v0[j]));
            }
        }
        let pt: Vec<FpPoly> = (0..3).map(|m| &qw.scale(&v0[m]) - &(&bw * &w[m]).scale(&two)).collect();
        let coords = vec![
            pt[0].clone(),
            &pt[2].scale(&(b * b)) - &pt[0],
            pt[1].clone(),
            &pt[2].scale(&a2) - &pt[1],
            pt[2].scale(&(b * c)),
        ];
        let mut roots = Vec::new();
        let mut leads = Vec::new();
        for x in &coords {
            let cs = x.coeffs_in(0);
            if cs.len() != 3 {
                break;
            }
            let [c0, c1, c2] = [0, 1, 2].map(|m| cs[m].constant_term());
            let Some(sq) = (c1 * c1 - Fp::new(4, p) * c2 * c0).sqrt() else {
                break;
            };
            let den = (two * c2).pow(p - 2);
            roots.push(vec![(sq - c1) * den, (-sq - c1) * den]);
            leads.push(c2);
        }
        if roots.len() != 5 || !distinct(&roots) {
            continue;
        }
        let w5: Vec<Fp> = leads.iter().map(|l| l.pow(5)).collect();
        return Ok(PlantedCurve {
            prime: p,
            psi: Fp::new(0, p),
            roots,
            c5: normalized(&w5),
            coords,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitangent::dwork_cover_solve;
    use rand::SeedableRng;

    #[test]
    fn planted_curves_lie_on_the_pencil_and_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for plant in [plant_line::<rand_chacha::ChaCha8Rng>, plant_conic] {
            for _ in 0..3 {
                let curve = plant(&mut rng, 10009).unwrap();
                assert!(curve.lies_on_dwork_quintic());
                let sol = dwork_cover_solve(&curve.roots).unwrap();
                assert!(sol.certified());
                assert_eq!(sol.c5, curve.c5);
            }
        }
    }

    #[test]
    fn rejects_primes_with_many_fifth_roots() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert!(plant_line(&mut rng, 101).is_err());
    }
}

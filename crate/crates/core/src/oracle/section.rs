//! Plane sections of the Fermat quintic over F_p that are singular at two
//! points P and Q of a bitangent line.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitangent::{base_locus_classify, contact_residuals, kernel_coords, BaseLocus, PointP4};
use crate::fp::{is_prime, Fp};
use crate::linalg::{nullspace, rank};
use crate::monomial::Vars;
use crate::oracle::OracleError;
use crate::FpPoly;

/// P, Q on X(F_p) and a third point R of the plane; the section is
/// F(xP + yQ + zR).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionInstance {
    pub prime: u64,
    pub p: [u64; 5],
    pub q: [u64; 5],
    pub r: [u64; 5],
}

fn fp5(v: &[u64; 5], p: u64) -> [Fp; 5] {
    v.map(|x| Fp::from_u64(x % p, p))
}

fn vals(v: &[Fp; 5]) -> [u64; 5] {
    v.map(|x| x.value())
}

impl SectionInstance {
    pub fn from_points(p: [Fp; 5], q: [Fp; 5], r: [Fp; 5]) -> Self {
        SectionInstance {
            prime: p[0].modulus(),
            p: vals(&p),
            q: vals(&q),
            r: vals(&r),
        }
    }

    pub fn points(&self) -> [[Fp; 5]; 3] {
        [
            fp5(&self.p, self.prime),
            fp5(&self.q, self.prime),
            fp5(&self.r, self.prime),
        ]
    }

    /// F_Λ(x, y, z) = Σ_i (x p_i + y q_i + z r_i)^5.
    pub fn flambda(&self) -> FpPoly {
        let vars = Vars::new(&["x", "y", "z"]);
        let g = FpPoly::gens(&vars, &self.prime);
        let [p, q, r] = self.points();
        (0..5).fold(g[0].zero_like(), |acc, i| {
            let lin = &(&(&g[0] * &g[0].constant_like(p[i])) + &(&g[1] * &g[1].constant_like(q[i])))
                + &(&g[2] * &g[2].constant_like(r[i]));
            &acc + &lin.pow(5)
        })
    }

    /// Checks that P, Q lie on X with vanishing contact residuals, that R is
    /// in both tangent hyperplanes and off the line PQ, and that F_Λ is
    /// singular at [1:0:0] and [0:1:0].
    pub fn validate(&self) -> Result<(), OracleError> {
        let bad = |m: &str| Err(OracleError::InvalidInstance(m.to_string()));
        if !is_prime(self.prime) {
            return Err(OracleError::BadPrime(self.prime));
        }
        let [p, q, r] = self.points();
        let zero = Fp::from_u64(0, self.prime);
        let fermat = |x: &[Fp; 5]| x.iter().fold(zero, |a, v| a + v.pow(5));
        if fermat(&p).value() != 0 || fermat(&q).value() != 0 {
            return bad("P or Q is not on X");
        }
        let (Ok(pp), Ok(qq)) = (PointP4::new(p), PointP4::new(q)) else {
            return bad("zero point");
        };
        if contact_residuals(&pp, &qq).iter().any(|v| v.value() != 0) {
            return bad("contact residuals do not vanish");
        }
        let tangent = |a: &[Fp; 5], x: &[Fp; 5]| (0..5).fold(zero, |s, i| s + a[i].pow(4) * x[i]);
        if tangent(&p, &r).value() != 0 || tangent(&q, &r).value() != 0 {
            return bad("R is not in both tangent hyperplanes");
        }
        if rank(&[p.to_vec(), q.to_vec(), r.to_vec()]) != 3 {
            return bad("P, Q, R are dependent");
        }
        let f = self.flambda();
        let one = Fp::from_u64(1, self.prime);
        for (name, pt) in [("P", [one, zero, zero]), ("Q", [zero, one, zero])] {
            if (0..3).any(|i| f.partial(i).eval(&pt).value() != 0) {
                return bad(&format!("section is smooth at {name}"));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rejection {
    BaseLocus,
    /// some M_i vanishes
    ZeroWeight,
    /// M_i / M_0 is not a fifth power, so P is not an F_p-point
    NotFifthPower,
    DegenerateExtension,
    NonResidue,
}

/// Draws U uniformly and passes it to [`instance_from_u`].
pub fn sample_instance<R: Rng + ?Sized>(rng: &mut R, prime: u64) -> Result<SectionInstance, Rejection> {
    let u: [Fp; 5] = std::array::from_fn(|_| Fp::random(rng, prime));
    instance_from_u(u, rng)
}

/// Lifts U to P = [M_i^(1/5)], Q = [p_i u_i] and picks R in
/// T_P X ∩ T_Q X off the line PQ.
pub fn instance_from_u<R: Rng + ?Sized>(u: [Fp; 5], rng: &mut R) -> Result<SectionInstance, Rejection> {
    let prime = u[0].modulus();
    let Ok(up) = PointP4::new(u) else {
        return Err(Rejection::BaseLocus);
    };
    if base_locus_classify(&up) != BaseLocus::NotInBaseLocus {
        return Err(Rejection::BaseLocus);
    }
    let m = kernel_coords(&u);
    if m.iter().any(|x| x.value() == 0) {
        return Err(Rejection::ZeroWeight);
    }
    let m0 = m[0].inv_fp();
    let mut p = [Fp::from_u64(1, prime); 5];
    for i in 1..5 {
        let roots = (m[i] * m0).roots(5);
        let Some(root) = roots.first() else {
            return Err(Rejection::NotFifthPower);
        };
        p[i] = *root;
    }
    let q: [Fp; 5] = std::array::from_fn(|i| p[i] * u[i]);
    let rows = vec![p.map(|x| x.pow(4)).to_vec(), q.map(|x| x.pow(4)).to_vec()];
    let basis = nullspace(&rows, 5, &prime);
    let r = loop {
        let coef: Vec<Fp> = basis.iter().map(|_| Fp::random(rng, prime)).collect();
        let r: [Fp; 5] = std::array::from_fn(|i| {
            basis
                .iter()
                .zip(&coef)
                .fold(Fp::from_u64(0, prime), |a, (b, c)| a + b[i] * *c)
        });
        if rank(&[p.to_vec(), q.to_vec(), r.to_vec()]) == 3 {
            break r;
        }
    };
    Ok(SectionInstance::from_points(p, q, r))
}

trait InvFp {
    fn inv_fp(&self) -> Fp;
}

impl InvFp for Fp {
    fn inv_fp(&self) -> Fp {
        crate::scalar::Scalar::inv(self).expect("nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn sampled_instances_validate() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut got = 0;
        for _ in 0..20000 {
            if let Ok(inst) = sample_instance(&mut rng, 101) {
                inst.validate().unwrap();
                got += 1;
                if got == 5 {
                    break;
                }
            }
        }
        assert_eq!(got, 5);
    }

    #[test]
    fn base_locus_is_skipped() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let u = [1, 1, 2, 2, 3].map(|v| Fp::new(v, 101));
        assert_eq!(instance_from_u(u, &mut rng), Err(Rejection::BaseLocus));
    }

    #[test]
    fn json_round_trip() {
        let inst = SectionInstance {
            prime: 7,
            p: [1, 2, 3, 4, 5],
            q: [0, 1, 0, 1, 0],
            r: [6, 6, 6, 6, 6],
        };
        let s = serde_json::to_string(&inst).unwrap();
        assert_eq!(serde_json::from_str::<SectionInstance>(&s).unwrap(), inst);
    }
}

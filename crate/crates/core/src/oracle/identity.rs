//! Schwartz–Zippel identity testing over a prime field.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::fp::{reduce_mod, Fp};
use crate::oracle::OracleError;
use crate::QPoly;

/// Largest acceptable soundness error.
pub const MAX_SOUNDNESS: f64 = 1.0 / (1u64 << 40) as f64;
/// Required ratio p / total degree.
pub const SAFETY_FACTOR: u64 = 1 << 10;

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub prime: u64,
    pub trials: u32,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityVerdict {
    pub passed: bool,
    /// a point where lhs and rhs differ
    pub witness: Option<Vec<u64>>,
    /// (total degree / p)^trials
    pub soundness: f64,
    /// log2 of `soundness`, which underflows f64 for large p
    pub soundness_log2: f64,
    pub trials: u32,
    pub prime: u64,
}

impl IdentityVerdict {
    pub fn bound_ok(&self) -> bool {
        self.soundness_log2 <= MAX_SOUNDNESS.log2()
    }
}

pub fn identity_test(check: &IdentityCheck) -> Result<IdentityVerdict, OracleError> {
    let p = check.prime;
    if !crate::fp::is_prime(p) {
        return Err(OracleError::BadPrime(p));
    }
    let diff = &check.lhs - &check.rhs;
    let deg = check.lhs.degree().max(check.rhs.degree()).max(1) as u64;
    if p / deg < SAFETY_FACTOR {
        return Err(OracleError::PrimeTooSmall { prime: p, degree: deg });
    }
    let f = reduce_mod(&diff, p).map_err(|e| OracleError::Reduction(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
    let n = f.vars().len();
    let soundness_log2 = check.trials as f64 * (deg as f64 / p as f64).log2();
    let soundness = soundness_log2.exp2();
    for _ in 0..check.trials {
        let pt: Vec<Fp> = (0..n).map(|_| Fp::random(&mut rng, p)).collect();
        if f.eval(&pt).value() != 0 {
            return Ok(IdentityVerdict {
                passed: false,
                witness: Some(pt.iter().map(Fp::value).collect()),
                soundness,
                soundness_log2,
                trials: check.trials,
                prime: p,
            });
        }
    }
    Ok(IdentityVerdict {
        passed: true,
        witness: None,
        soundness,
        soundness_log2,
        trials: check.trials,
        prime: p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::MERSENNE_61;
    use crate::monomial::Vars;

    fn xy() -> (QPoly, QPoly) {
        let g = QPoly::gens(&Vars::new(&["x", "y"]), &());
        (g[0].clone(), g[1].clone())
    }

    fn check(lhs: QPoly, rhs: QPoly) -> IdentityCheck {
        IdentityCheck {
            lhs,
            rhs,
            prime: MERSENNE_61,
            trials: 20,
            seed: 1,
        }
    }

    #[test]
    fn identical_sides_pass() {
        let (x, y) = xy();
        let l = (&x + &y).pow(2);
        let r = &(&x.square() + &(&x * &y).scale(&2.into())) + &y.square();
        let v = identity_test(&check(l, r)).unwrap();
        assert!(v.passed && v.bound_ok());
    }

    #[test]
    fn off_by_one_fails_with_witness() {
        let (x, _) = xy();
        let v = identity_test(&check(&x + &x.one_like(), x)).unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.unwrap().len(), 2);
    }

    #[test]
    fn small_prime_is_rejected() {
        let (x, _) = xy();
        let mut c = check(x.pow(20), x.pow(20));
        c.prime = 10007;
        assert!(matches!(identity_test(&c), Err(OracleError::PrimeTooSmall { .. })));
    }
}

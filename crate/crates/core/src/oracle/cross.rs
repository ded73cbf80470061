//! Agreement between the conic system and brute-force factorization.

use std::collections::{BTreeMap, BTreeSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bitangent::{elementary_values, kernel_coords, quartics};
use crate::casestudy::ExceptionalFrame;
use crate::conicsystem::{
    build_system, factor_certificate, pencil_roots_fp, svalues_from_quintic, ConicError, PencilChoice, SValues,
};
use crate::fp::{reduce_mod, Fp, MERSENNE_61};
use crate::linalg::{nullspace, rank};
use crate::monomial::{Monomial, Vars};
use crate::oracle::{
    brute_force_conics, identity_test, sample_instance, IdentityCheck, IdentityVerdict, OracleError, Rejection,
    SectionInstance, ENUMERATION_BOUND,
};
use crate::report::Report;
use crate::{FpPoly, QPoly, Rational};

/// Pencils for the S-values of a section. When S20 = S30 = 0 both
/// quadratics are linear and the single finite pencil is
/// α = −S32/(2 S31), β = −S02/(2 S11).
fn pencils(s: &SValues<Fp>) -> Result<Vec<PencilChoice<Fp>>, ConicError> {
    let zero = |m, n| s.get(m, n).value() == 0;
    if zero(2, 0) && zero(3, 0) {
        if zero(1, 1) || zero(3, 1) {
            return Err(ConicError::DegeneratePencil("S11 S31 = 0 with S20 = S30 = 0".into()));
        }
        let half = |num: Fp, den: Fp| -num * (den + den).pow(den.modulus() - 2);
        return Ok(vec![PencilChoice {
            alpha: half(s.get(3, 2), s.get(3, 1)),
            beta: half(s.get(0, 2), s.get(1, 1)),
            branch: (0, 0),
        }]);
    }
    Ok(pencil_roots_fp(s)?.to_vec())
}

/// Conics xy − (βx + αy)z + dz² solving E1..E5, by scanning d ∈ F_p, as
/// normalized keys (1, −β, −α, d). Each is certified by multiplication.
pub fn system_conics(s: &SValues<Fp>) -> Result<BTreeSet<[u64; 4]>, ConicError> {
    let p = s.zero().modulus();
    let mut out = BTreeSet::new();
    for ch in pencils(s)? {
        let sys = build_system(s, &ch);
        for d in 0..p {
            let d = Fp::from_u64(d, p);
            if sys.eval(&d).iter().all(|v| v.value() == 0) {
                factor_certificate(s, &ch, &d)?;
                out.insert([1, (-ch.beta).value(), (-ch.alpha).value(), d.value()]);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleOutcome {
    pub index: usize,
    pub instance: SectionInstance,
    /// a constructed instance (exceptional pair or S3 plane), not a sample
    pub exceptional: bool,
    pub system: Vec<[u64; 4]>,
    pub brute: Vec<[u64; 4]>,
    /// brute-force factors containing the line PQ, not produced by the system
    pub line_pq: usize,
    pub degenerate: usize,
    pub agreed: bool,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossReport {
    pub prime: u64,
    pub seed: u64,
    pub requested: usize,
    pub outcomes: Vec<SampleOutcome>,
    pub rejections: BTreeMap<Rejection, usize>,
    pub identities: Vec<(String, IdentityVerdict)>,
}

impl CrossReport {
    pub fn agreement(&self) -> usize {
        self.outcomes.iter().filter(|o| o.agreed).count()
    }

    pub fn bounds_ok(&self) -> bool {
        self.identities.iter().all(|(_, v)| v.bound_ok())
    }

    /// The first disagreement, with the instance serialized for replay.
    pub fn first_failure(&self) -> Option<OracleError> {
        self.outcomes
            .iter()
            .find(|o| !o.agreed)
            .map(|o| OracleError::AgreementFailure {
                instance: serde_json::to_string(&o.instance).expect("serializable"),
                detail: o
                    .error
                    .clone()
                    .unwrap_or_else(|| format!("system {:?} vs brute {:?}", o.system, o.brute)),
            })
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new(&format!("oracle p={} seed={}", self.prime, self.seed));
        let generic = self.outcomes.iter().filter(|o| !o.exceptional).count();
        r.check(
            "admissible samples",
            generic == self.requested,
            format!("{generic}/{}", self.requested),
        );
        r.check(
            "system solutions = brute-force conics through P, Q",
            self.agreement() == self.outcomes.len(),
            format!("{}/{}", self.agreement(), self.outcomes.len()),
        );
        for o in self.outcomes.iter().filter(|o| o.exceptional) {
            r.check(
                format!("special instance {} agrees", o.index),
                o.agreed,
                format!("{} conic(s)", o.brute.len()),
            );
        }
        for (name, v) in &self.identities {
            r.check(
                format!("identity {name}"),
                v.passed && v.bound_ok(),
                format!("soundness 2^{:.0}", v.soundness_log2),
            );
        }
        let conics: usize = self.outcomes.iter().map(|o| o.brute.len()).sum();
        let lines: usize = self.outcomes.iter().map(|o| o.line_pq).sum();
        let degen: usize = self.outcomes.iter().map(|o| o.degenerate).sum();
        r.note(format!(
            "{conics} conic factor(s), {degen} degenerate, {lines} containing the line PQ"
        ));
        let rej: Vec<String> = self.rejections.iter().map(|(k, v)| format!("{k:?} {v}")).collect();
        r.note(format!("rejections: {}", rej.join(", ")));
        r
    }
}

fn compare(index: usize, instance: SectionInstance, exceptional: bool) -> SampleOutcome {
    let mut out = SampleOutcome {
        index,
        instance,
        exceptional,
        system: Vec::new(),
        brute: Vec::new(),
        line_pq: 0,
        degenerate: 0,
        agreed: false,
        error: None,
    };
    let s = match svalues_from_quintic(&out.instance.flambda()) {
        Ok(s) => s,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let brute = match brute_force_conics(&out.instance) {
        Ok(b) => b,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let system = match system_conics(&s) {
        Ok(v) => v,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.line_pq = brute.iter().filter(|f| f.contains_line_pq).count();
    out.degenerate = brute.iter().filter(|f| f.degenerate).count();
    let through: BTreeSet<[u64; 4]> = brute.iter().filter(|f| !f.contains_line_pq).map(|f| f.conic).collect();
    out.agreed = through == system;
    out.system = system.into_iter().collect();
    out.brute = through.into_iter().collect();
    out
}

fn admissible(inst: &SectionInstance) -> Result<(), Rejection> {
    let s = svalues_from_quintic(&inst.flambda()).map_err(|_| Rejection::DegenerateExtension)?;
    match pencil_roots_fp(&s) {
        Ok(_) => Ok(()),
        Err(ConicError::NonResidue(_)) => Err(Rejection::NonResidue),
        Err(_) => Err(Rejection::DegenerateExtension),
    }
}

/// A section through the tangency pair P = [a:b:c:1:−1], Q = [a:b:c:−1:1]
/// at t = 0 and b = 1, with c the first value for which a = (−1 − c^5)^(1/5)
/// exists, abc ≠ 0 and S11 S31 ≠ 0.
pub fn exceptional_instance(p: u64) -> Option<SectionInstance> {
    let frame = ExceptionalFrame::new();
    for c in 1..p {
        let cv = Fp::from_u64(c, p);
        let Some(a) = (-(Fp::new(1, p) + cv.pow(5)))
            .roots(5)
            .into_iter()
            .find(|a| a.value() != 0)
        else {
            continue;
        };
        let pt = [Fp::new(0, p), a, Fp::new(1, p), cv];
        let at =
            |x: &[QPoly; 5]| -> [Fp; 5] { std::array::from_fn(|i| reduce_mod(&x[i], p).expect("integral").eval(&pt)) };
        let inst = SectionInstance::from_points(at(&frame.p), at(&frame.q), at(&frame.r));
        if inst.validate().is_err() {
            continue;
        }
        let Ok(s) = svalues_from_quintic(&inst.flambda()) else {
            continue;
        };
        if s.get(1, 1).value() != 0 && s.get(3, 1).value() != 0 {
            return Some(inst);
        }
    }
    None
}

/// The S3 example plane at ψ = 0: c e1 = a x4, c x3 = b x4 with
/// a^5 + b^5 + c^5 = 0, singular at P = [a:−a:ia:ib:ic] and
/// Q = [a:−a:−ia:−ib:−ic], which lie on the conic e1² = e2 and on the line
/// x0 + x1 = 0 of the cubic. Returns the instance and the normalized key of
/// that conic in the frame coordinates.
pub fn example_s3_instance(p: u64) -> Option<(SectionInstance, [u64; 4])> {
    let i = Fp::new(-1, p).sqrt()?;
    for b in 1..p {
        for c in 1..p {
            let (bv, cv) = (Fp::from_u64(b, p), Fp::from_u64(c, p));
            let Some(a) = (-(bv.pow(5) + cv.pow(5))).roots(5).into_iter().find(|a| a.value() != 0) else {
                continue;
            };
            let pp = [a, -a, i * a, i * bv, i * cv];
            let qq = [a, -a, -i * a, -i * bv, -i * cv];
            // the plane as the kernel of its two forms
            let forms = vec![
                vec![cv, cv, cv, Fp::new(0, p), -a],
                vec![Fp::new(0, p), Fp::new(0, p), Fp::new(0, p), cv, -bv],
            ];
            let Some(r) = nullspace(&forms, 5, &p)
                .into_iter()
                .find(|v| rank(&[pp.to_vec(), qq.to_vec(), v.clone()]) == 3)
            else {
                continue;
            };
            let r: [Fp; 5] = r.try_into().expect("five coordinates");
            let inst = SectionInstance::from_points(pp, qq, r);
            if inst.validate().is_err() {
                continue;
            }
            // e1² − e2 on x0, x1, x2 pulled back to x P + y Q + z R
            let vars = Vars::new(&["x", "y", "z"]);
            let g = FpPoly::gens(&vars, &p);
            let lin: Vec<FpPoly> = (0..3)
                .map(|k| &(&g[0].scale(&pp[k]) + &g[1].scale(&qq[k])) + &g[2].scale(&r[k]))
                .collect();
            let e1 = &(&lin[0] + &lin[1]) + &lin[2];
            let e2 = &(&(&lin[0] * &lin[1]) + &(&lin[0] * &lin[2])) + &(&lin[1] * &lin[2]);
            let conic = &e1.square() - &e2;
            let coef = |e: [u16; 3]| conic.coefficient(&Monomial::from_exps(&e));
            let raw = [coef([1, 1, 0]), coef([1, 0, 1]), coef([0, 1, 1]), coef([0, 0, 2])];
            let lead = raw.iter().find(|v| v.value() != 0)?.pow(p - 2);
            return Some((inst, raw.map(|v| (v * lead).value())));
        }
    }
    None
}

/// Schwartz–Zippel checks of kernel identities at 2^61 − 1.
pub fn sz_battery(seed: u64) -> Result<Vec<(String, IdentityVerdict)>, OracleError> {
    let vars = Vars::indexed("u", 5);
    let g = QPoly::gens(&vars, &());
    let u: [QPoly; 5] = std::array::from_fn(|i| g[i].clone());
    let e = elementary_values(&u, &g[0].zero_like());
    let n = quartics(&u);
    let m = kernel_coords(&u);
    let mut checks = vec![(
        "sum n_i = 3 e2^2 - 4 e1 e3".to_string(),
        n.iter().fold(g[0].zero_like(), |a, x| &a + x),
        &e[2].square().scale(&Rational::from(3)) - &(&e[1] * &e[3]).scale(&Rational::from(4)),
    )];
    // the kernel rows: S_m0 = Σ M_i u_i^m vanishes for m = 0, 1, 4, 5
    for k in [0, 1, 4, 5] {
        let lhs = (0..5).fold(g[0].zero_like(), |a, i| &a + &(&m[i] * &u[i].pow(k)));
        checks.push((format!("sum M_i u_i^{k} = 0"), lhs, g[0].zero_like()));
    }
    checks
        .into_iter()
        .enumerate()
        .map(|(i, (name, lhs, rhs))| {
            let v = identity_test(&IdentityCheck {
                lhs,
                rhs,
                prime: MERSENNE_61,
                trials: 20,
                seed: seed.wrapping_add(i as u64),
            })?;
            Ok((name, v))
        })
        .collect()
}

/// Draws `samples` admissible instances with a ChaCha8 stream seeded by
/// `seed`, adds the exceptional instance when one exists at p, and compares
/// both sides on each. Results are ordered by sample index.
pub fn cross_validate(samples: usize, p: u64, seed: u64) -> Result<CrossReport, OracleError> {
    if !crate::fp::is_prime(p) || p <= 5 {
        return Err(OracleError::BadPrime(p));
    }
    if p > ENUMERATION_BOUND {
        return Err(OracleError::PrimeTooLarge {
            prime: p,
            bound: ENUMERATION_BOUND,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rejections: BTreeMap<Rejection, usize> = BTreeMap::new();
    let mut instances = Vec::with_capacity(samples + 1);
    while instances.len() < samples {
        match sample_instance(&mut rng, p).and_then(|i| admissible(&i).map(|_| i)) {
            Ok(inst) => instances.push((inst, false)),
            Err(r) => *rejections.entry(r).or_default() += 1,
        }
    }
    if let Some(inst) = exceptional_instance(p) {
        instances.push((inst, true));
    }
    if let Some((inst, _)) = example_s3_instance(p) {
        instances.push((inst, true));
    }
    let outcomes: Vec<SampleOutcome> = instances
        .into_par_iter()
        .enumerate()
        .map(|(i, (inst, exc))| compare(i, inst, exc))
        .collect();
    Ok(CrossReport {
        prime: p,
        seed,
        requested: samples,
        outcomes,
        rejections,
        identities: sz_battery(seed)?,
    })
}

/// Compares both sides on previously dumped instances, e.g. the one carried
/// by an AgreementFailure.
pub fn replay(instances: Vec<SectionInstance>, seed: u64) -> Result<CrossReport, OracleError> {
    let Some(p) = instances.first().map(|i| i.prime) else {
        return Err(OracleError::InvalidInstance("no instances to replay".into()));
    };
    if instances.iter().any(|i| i.prime != p) {
        return Err(OracleError::InvalidInstance("instances over different primes".into()));
    }
    if p > ENUMERATION_BOUND {
        return Err(OracleError::PrimeTooLarge {
            prime: p,
            bound: ENUMERATION_BOUND,
        });
    }
    for inst in &instances {
        inst.validate()?;
    }
    let requested = instances.len();
    let outcomes = instances
        .into_par_iter()
        .enumerate()
        .map(|(i, inst)| compare(i, inst, false))
        .collect();
    Ok(CrossReport {
        prime: p,
        seed,
        requested,
        outcomes,
        rejections: BTreeMap::new(),
        identities: sz_battery(seed)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_instance_routes_to_s11_branch() {
        let inst = exceptional_instance(89).expect("instance at 89");
        let s = svalues_from_quintic(&inst.flambda()).unwrap();
        assert_eq!((s.get(2, 0).value(), s.get(3, 0).value()), (0, 0));
        let o = compare(0, inst, true);
        assert!(o.agreed, "{o:?}");
        assert!(!o.brute.is_empty());
    }

    #[test]
    fn replay_reproduces_a_sample() {
        let run = cross_validate(2, 31, 3).unwrap();
        let insts: Vec<SectionInstance> = run.outcomes.iter().map(|o| o.instance.clone()).collect();
        let again = replay(insts, 3).unwrap();
        for (a, b) in run.outcomes.iter().zip(&again.outcomes) {
            assert_eq!((&a.system, &a.brute, a.agreed), (&b.system, &b.brute, b.agreed));
        }
        assert!(replay(Vec::new(), 0).is_err());
    }

    #[test]
    fn s3_conic_is_found() {
        let (inst, key) = example_s3_instance(89).expect("instance at 89");
        let brute = brute_force_conics(&inst).unwrap();
        assert!(brute.iter().any(|f| f.conic == key), "{key:?}");
        let o = compare(0, inst, true);
        assert!(o.agreed, "{o:?}");
    }

    #[test]
    fn brute_force_commutes_with_the_swap() {
        let (inst, _) = example_s3_instance(89).unwrap();
        let swapped = SectionInstance {
            q: inst.p,
            p: inst.q,
            ..inst.clone()
        };
        let found = brute_force_conics(&inst).unwrap();
        let conj: BTreeSet<[u64; 4]> = found.iter().map(|f| f.swapped_key(89)).collect();
        let direct: BTreeSet<[u64; 4]> = brute_force_conics(&swapped).unwrap().iter().map(|f| f.conic).collect();
        assert_eq!(direct, conj);
        assert!(!conj.is_empty());
    }

    #[test]
    fn small_run_agrees_and_is_deterministic() {
        let a = cross_validate(3, 31, 9).unwrap();
        let b = cross_validate(3, 31, 9).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.to_report().passed(), "{}", a.to_report());
    }
}

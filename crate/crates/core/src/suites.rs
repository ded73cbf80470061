//! The verification suites, one report per family of checks, shared by the
//! command-line front end and the acceptance tests.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitangent::dwork_cover_solve;
use crate::casestudy::{constants_report, exceptional_report, verify_example_s3, verify_example_z2z2};
use crate::conicsystem::{recursion_report, FormalFrame};
use crate::oracle::{cross_validate, plant_conic, plant_line, CrossReport, OracleError};
use crate::report::Report;
use crate::symfun::{
    base_locus_identities, e_symbol, involution_relations, kernel, option1_table, option2_frame,
    verify_vandermonde_kernel,
};

/// Prime for planted Dwork curves: 5 ∤ p − 1 and p ≡ 1 mod 4.
pub const ROUND_TRIP_PRIME: u64 = 10009;

pub fn kernel_suite() -> Report {
    verify_vandermonde_kernel(kernel())
}

pub fn base_locus_suite() -> Report {
    base_locus_identities(kernel())
}

pub fn involution_suite() -> Report {
    involution_relations()
}

/// Initial values of both frames and the closed second-frame entries.
pub fn s_table_suite() -> Report {
    let mut r = Report::new("S table");
    let mut first = Report::new("option 1 frame");
    let t = option1_table(5);
    let z = e_symbol(1).zero_like();
    for (m, want) in [(0, &z), (1, &z), (2, &e_symbol(2)), (3, &e_symbol(3)), (4, &z), (5, &z)] {
        first.check(format!("S_{m}0"), t.s(m, 0) == want, "");
    }
    r.absorb(first);
    let (_, _, second) = option2_frame(5, 1);
    r.absorb(second);
    r
}

pub fn recursion_suite() -> Report {
    recursion_report(&FormalFrame::new(), 4)
}

pub fn exceptional_suite() -> Report {
    exceptional_report()
}

pub fn examples_suite() -> Report {
    let mut r = Report::new("examples");
    r.absorb(verify_example_s3());
    r.absorb(verify_example_z2z2());
    r
}

pub fn constants_suite() -> Report {
    constants_report()
}

/// Plants `count` lines and `count` conics on Dwork quintics over F_p and
/// recovers [c_i^5] from the coordinate roots alone.
pub fn round_trip_suite(count: usize, p: u64, seed: u64) -> Result<Report, OracleError> {
    let mut r = Report::new("dwork round trip");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (deg, name) in [(1, "lines"), (2, "conics")] {
        let mut ok = 0;
        let mut first_bad = None;
        for k in 0..count {
            let curve = if deg == 1 {
                plant_line(&mut rng, p)?
            } else {
                plant_conic(&mut rng, p)?
            };
            let good = curve.lies_on_dwork_quintic()
                && dwork_cover_solve(&curve.roots)
                    .map(|s| s.certified() && s.c5 == curve.c5)
                    .unwrap_or(false);
            if good {
                ok += 1;
            } else {
                first_bad.get_or_insert(k);
            }
        }
        let detail = match first_bad {
            None => format!("{ok}/{count} at p = {p}"),
            Some(k) => format!("{ok}/{count} at p = {p}, first miss at instance {k}"),
        };
        r.check(format!("planted {name} recovered"), ok == count, detail);
    }
    Ok(r)
}

pub fn oracle_suite(samples: usize, p: u64, seed: u64) -> Result<CrossReport, OracleError> {
    cross_validate(samples, p, seed)
}

/// Everything on the symmetric-function and bitangent side.
pub fn identities_suite(seed: u64) -> Report {
    let mut r = Report::new("identities");
    r.absorb(kernel_suite());
    r.absorb(base_locus_suite());
    r.absorb(involution_suite());
    r.absorb(s_table_suite());
    match round_trip_suite(10, ROUND_TRIP_PRIME, seed) {
        Ok(rt) => r.absorb(rt),
        Err(e) => r.check("dwork round trip", false, e.to_string()),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_deterministic() {
        let a = round_trip_suite(3, ROUND_TRIP_PRIME, 4).unwrap();
        let b = round_trip_suite(3, ROUND_TRIP_PRIME, 4).unwrap();
        assert!(a.passed(), "{a}");
        assert_eq!(a.items, b.items);
    }

    #[test]
    fn round_trip_needs_unique_fifth_roots() {
        assert!(round_trip_suite(1, 101, 0).is_err());
    }
}

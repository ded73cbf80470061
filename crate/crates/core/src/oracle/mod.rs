//! Finite-field checks: Schwartz–Zippel identity tests, a brute-force
//! factorization oracle for plane quintic sections, and the cross-validation
//! of the conic system against it.

mod brute;
mod cross;
mod identity;
mod plant;
mod section;

use thiserror::Error;

pub use brute::{brute_force_conics, conic_factors, ConicFactor, Contact, ENUMERATION_BOUND};
pub use cross::{
    cross_validate, example_s3_instance, exceptional_instance, replay, system_conics, sz_battery, CrossReport,
    SampleOutcome,
};
pub use identity::{identity_test, IdentityCheck, IdentityVerdict, MAX_SOUNDNESS, SAFETY_FACTOR};
pub use plant::{plant_conic, plant_line, PlantedCurve};
pub use section::{instance_from_u, sample_instance, Rejection, SectionInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    BadPrime(u64),
    #[error("prime {prime} is too small for total degree {degree}")]
    PrimeTooSmall { prime: u64, degree: u64 },
    #[error("prime {prime} exceeds the enumeration bound {bound}")]
    PrimeTooLarge { prime: u64, bound: u64 },
    #[error("reduction mod p failed: {0}")]
    Reduction(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    /// `instance` is the JSON of the offending [`SectionInstance`].
    #[error("system and brute force disagree ({detail}) on {instance}")]
    AgreementFailure { instance: String, detail: String },
}

//! The exceptional-locus computation, the two symmetric example families
//! and the line-count constant.

pub mod classify;
pub mod examples;
pub mod exceptional;

pub use classify::classify_solutions;
pub use examples::{constants_report, lines_contribution_constant, verify_example_s3, verify_example_z2z2};
pub use exceptional::{compute, cross_check_with_system, f_report, CaseStudy, ExceptionalFrame, ExceptionalSystem};

use crate::report::Report;

/// Every exceptional-locus check in one report.
pub fn exceptional_report() -> Report {
    let frame = ExceptionalFrame::new();
    let cs = compute(&frame);
    let mut r = Report::new("exceptional locus");
    r.absorb(frame.span_report());
    r.absorb(frame.smn_report(&cs.s));
    r.absorb(f_report(&frame, &cs));
    r.absorb(cross_check_with_system(&frame, &cs.system));
    r.absorb(classify_solutions(&frame, &cs));
    r
}

/// Both example families and the constant.
pub fn examples_report() -> Report {
    let mut r = Report::new("examples");
    r.absorb(verify_example_s3());
    r.absorb(verify_example_z2z2());
    r.absorb(constants_report());
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_locus() {
        let r = exceptional_report();
        let failing: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(
            failing,
            [
                "exceptional f3 f4 f5: f5|t=1 as displayed",
                "exceptional f3 f4 f5: f5|c=0 as displayed",
            ],
            "{r}"
        );
    }
}

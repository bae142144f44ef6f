//! Measurable versions of the two sum-product arguments: the Elekes incidence
//! configuration and the energy/wedge pipeline, plus exponent sweeps.

use alloc::string::String;

pub mod elekes;
pub mod exponent;
pub mod solymosi;

pub use elekes::{build_elekes, classify_incidences, ClassifyOptions, ElekesConfig, SpecialIncidenceStats};
pub use exponent::{exponent_sweep, theorem_exponent, ExponentCase, ExponentEstimate, TheoremExponent};
pub use solymosi::{solymosi_pipeline, SolymosiReport, WedgeReport};

/// One exact inequality or identity evaluated on measured counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    /// The compared quantities, e.g. `"44 <= 128"`.
    pub detail: String,
}

impl Check {
    pub fn le<T: PartialOrd + core::fmt::Display>(name: &'static str, lhs: T, rhs: T) -> Self {
        Check { name, holds: lhs <= rhs, detail: alloc::format!("{lhs} <= {rhs}") }
    }

    pub fn eq<T: PartialEq + core::fmt::Display>(name: &'static str, lhs: T, rhs: T) -> Self {
        Check { name, holds: lhs == rhs, detail: alloc::format!("{lhs} == {rhs}") }
    }
}

pub fn all_hold(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.holds)
}

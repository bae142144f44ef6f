use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::diag::log_log_slope;
use crate::numbers::System;
use crate::rational::{frac, int, Rational};
use crate::sets::{generate, multiplicity, productset, sumset, ConstructionKind};
use crate::{Error, Result};

/// Which branch of the lower bound for `max{|A+A|, |AA|}` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExponentCase {
    /// `α < 1/8`: `(4 − 2α)/3`
    Low,
    /// `1/8 ≤ α < 1/3`: `5/4`
    Flat,
    /// `1/3 ≤ α < 1/2`: `3/2 − 5α/8`
    Linear,
    /// `1/2 ≤ α < κ`: `9/4 − 39α/16 + 5α²/8`
    Quadratic,
}

impl ExponentCase {
    pub fn formula(self) -> &'static str {
        match self {
            ExponentCase::Low => "(4-2a)/3",
            ExponentCase::Flat => "5/4",
            ExponentCase::Linear => "3/2-5a/8",
            ExponentCase::Quadratic => "9/4-39a/16+5a^2/8",
        }
    }

    pub fn range(self) -> &'static str {
        match self {
            ExponentCase::Low => "0 <= a < 1/8",
            ExponentCase::Flat => "1/8 <= a < 1/3",
            ExponentCase::Linear => "1/3 <= a < 1/2",
            ExponentCase::Quadratic => "1/2 <= a < kappa",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremExponent {
    pub system: System,
    pub alpha: Rational,
    pub case: ExponentCase,
    pub value: Rational,
}

impl fmt::Display for TheoremExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}, {}]", self.value, self.case.formula(), self.case.range())
    }
}

fn quadratic(alpha: &Rational) -> Rational {
    frac(9, 4) - frac(39, 16) * alpha + frac(5, 8) * alpha * alpha
}

/// Exponent of the lower bound for `max{|A+A|, |AA|}` at multiplicity `n^α`.
///
/// Valid for `0 ≤ α < κ = (39 − √721)/20`. The upper end is tested exactly:
/// `α < κ` iff `α ≤ 1` and `9/4 − 39α/16 + 5α²/8 > 1`. The same table holds
/// for both systems.
pub fn theorem_exponent(system: System, alpha: &Rational) -> Result<TheoremExponent> {
    if alpha.is_negative() {
        return Err(Error::OutOfRange(alloc::format!("alpha = {alpha} is negative")));
    }
    let q = quadratic(alpha);
    if *alpha > Rational::one() || q <= Rational::one() {
        return Err(Error::OutOfRange(alloc::format!("alpha = {alpha} is not below kappa = (39 - sqrt 721)/20")));
    }
    let (case, value) = if *alpha < frac(1, 8) {
        (ExponentCase::Low, (int(4) - int(2) * alpha) / int(3))
    } else if *alpha < frac(1, 3) {
        (ExponentCase::Flat, frac(5, 4))
    } else if *alpha < frac(1, 2) {
        (ExponentCase::Linear, frac(3, 2) - frac(5, 8) * alpha)
    } else {
        (ExponentCase::Quadratic, q)
    };
    Ok(TheoremExponent { system, alpha: alpha.clone(), case, value })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    /// Requested size.
    pub n: u64,
    /// Actual `|A|` (grid sides are rounded).
    pub size: usize,
    pub multiplicity: usize,
    pub sumset: usize,
    pub productset: usize,
}

impl SweepRow {
    pub fn max(&self) -> usize {
        self.sumset.max(self.productset)
    }
}

#[derive(Clone, Debug)]
pub struct ExponentEstimate {
    pub kind: ConstructionKind,
    pub alpha: Option<Rational>,
    pub rows: Vec<SweepRow>,
    /// Least-squares slope of `ln max{|A+A|, |AA|}` against `ln |A|`.
    pub slope: f64,
    /// Growth exponent the construction is known not to exceed, where one is
    /// known: `1` for the unit-real set and `3 − 2α` for the dual grid.
    pub envelope: Option<Rational>,
    /// Lower-bound exponent at the construction's `α`, when `α` is in range.
    pub theorem: Option<TheoremExponent>,
}

impl ExponentEstimate {
    pub fn describe(&self) -> String {
        alloc::format!(
            "{} alpha={} slope={:.4} envelope={} theorem={}",
            self.kind,
            self.alpha.as_ref().map_or(String::from("-"), |a| alloc::format!("{a}")),
            self.slope,
            self.envelope.as_ref().map_or(String::from("-"), |a| alloc::format!("{a}")),
            self.theorem.as_ref().map_or(String::from("-"), |t| alloc::format!("{}", t.value)),
        )
    }
}

/// Measures `max{|A+A|, |AA|}` over `sizes` and fits the log-log slope.
pub fn exponent_sweep(kind: ConstructionKind, alpha: Option<&Rational>, sizes: &[u64]) -> Result<ExponentEstimate> {
    if sizes.len() < 3 {
        return Err(Error::InvalidParameter(alloc::format!("need at least 3 sizes, got {}", sizes.len())));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) || sizes[0] < 2 {
        return Err(Error::InvalidParameter("sizes must be strictly ascending and at least 2".into()));
    }
    match (kind.takes_alpha(), alpha) {
        (true, None) => return Err(Error::InvalidParameter(alloc::format!("{kind} needs alpha"))),
        (false, Some(_)) => return Err(Error::InvalidParameter(alloc::format!("{kind} takes no alpha"))),
        _ => {}
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let built = generate(kind, n, alpha)?;
        let a = built.primary();
        rows.push(SweepRow {
            n,
            size: a.len(),
            multiplicity: multiplicity(a).max_multiplicity,
            sumset: sumset(a).len(),
            productset: productset(a).len(),
        });
    }
    let samples: Vec<(u64, u64)> = rows.iter().map(|r| (r.size as u64, r.max() as u64)).collect();
    let slope = log_log_slope(&samples)
        .ok_or_else(|| Error::InvalidParameter("sizes do not give distinct set sizes for a fit".into()))?;
    let envelope = match kind {
        ConstructionKind::UnitRealDual => Some(Rational::one()),
        ConstructionKind::DualGrid => alpha.map(|a| int(3) - int(2) * a),
        _ => None,
    };
    let theorem = alpha.and_then(|a| theorem_exponent(kind.system(), a).ok());
    debug_assert!(rows.iter().all(|r| !r.size.is_zero()));
    Ok(ExponentEstimate { kind, alpha: alpha.cloned(), rows, slope, envelope, theorem })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values() {
        assert_eq!(theorem_exponent(System::Dual, &int(0)).unwrap().value, frac(4, 3));
        let t = theorem_exponent(System::Double, &frac(2, 5)).unwrap();
        assert_eq!((t.case, t.value), (ExponentCase::Linear, frac(5, 4)));
        let t = theorem_exponent(System::Dual, &frac(11, 20)).unwrap();
        assert_eq!((t.case, t.value.clone()), (ExponentCase::Quadratic, frac(3515, 3200)));
        assert_eq!(crate::diag::rational_to_decimal(&t.value, 7), "1.0984375");
        assert_eq!(theorem_exponent(System::Dual, &frac(1, 4)).unwrap().case, ExponentCase::Flat);
    }

    #[test]
    fn kappa_boundary() {
        // κ ≈ 0.60739
        assert!(theorem_exponent(System::Dual, &frac(607, 1000)).is_ok());
        assert!(theorem_exponent(System::Dual, &frac(608, 1000)).is_err());
        assert!(theorem_exponent(System::Dual, &int(1)).is_err());
        assert!(theorem_exponent(System::Dual, &int(5)).is_err());
        assert!(theorem_exponent(System::Dual, &frac(-1, 10)).is_err());
    }

    #[test]
    fn sweep_preconditions() {
        assert!(exponent_sweep(ConstructionKind::UnitRealDual, None, &[4, 8]).is_err());
        assert!(exponent_sweep(ConstructionKind::UnitRealDual, None, &[8, 4, 16]).is_err());
        assert!(exponent_sweep(ConstructionKind::DualGrid, None, &[4, 8, 16]).is_err());
        assert!(exponent_sweep(ConstructionKind::UnitRealDual, Some(&frac(1, 2)), &[4, 8, 16]).is_err());
    }

    #[test]
    fn unit_real_is_linear() {
        let est = exponent_sweep(ConstructionKind::UnitRealDual, None, &[16, 32, 64]).unwrap();
        assert!((est.slope - 1.0).abs() < 0.05, "{}", est.describe());
        assert!(est.rows.iter().all(|r| r.max() as u64 == 2 * r.n - 1));
    }
}

//! Energy/wedge pipeline.
//!
//! Pairs `(x, y) ∈ A × A` are sorted onto the real lines `y = λx` through the
//! parameters `(f(x), f(y))`, where `f` is `Re` on 𝔻 and `Δ⁺` on 𝕊. Adding a
//! point of one line to a representative of the next lands strictly inside the
//! wedge between them, so the sums are distinct and wedges do not overlap.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::Check;
use crate::numbers::{PlanarNumber, System};
use crate::rational::{ceil_log2, Rational};
use crate::sets::{describe, energy_report, multiplicity, productset, sumset, EnergyOptions, EnergyReport, NumberSet};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct WedgeReport {
    pub system: System,
    /// The input after keeping the majority sign of `f` (negated if negative).
    pub set: NumberSet,
    pub negated: bool,
    /// Elements dropped by the sign normalization.
    pub dropped: usize,
    pub multiplicity: usize,
    pub dyadic_class: u32,
    pub lambda: Vec<Rational>,
    /// `P ∩ ℓᵢ` as index pairs `(x, y)` into `set` with `f(y) = λᵢ f(x)`.
    pub on_lines: Vec<Vec<(usize, usize)>>,
    /// `Sᵢ` for `i < |Λ| − 1`: one pair of `P ∩ ℓᵢ₊₁` per distinct `f(x)`.
    pub representatives: Vec<Vec<(usize, usize)>>,
    /// `|(P ∩ ℓᵢ) + Sᵢ|`.
    pub wedge_sizes: Vec<usize>,
    pub sumset_size: usize,
    pub productset_size: usize,
    /// `Σᵢ |P ∩ ℓᵢ|·|P ∩ ℓᵢ₊₁|`.
    pub chain_sum: u128,
    /// `|A+A|²·|AA|·k² / n⁴`.
    pub ratio: Rational,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct SolymosiReport {
    pub wedge: WedgeReport,
    pub energy: EnergyReport,
}

impl SolymosiReport {
    pub fn all_hold(&self) -> bool {
        super::all_hold(&self.wedge.checks)
    }
}

/// Keeps the elements whose parameter has the majority sign (ties keep the
/// positive ones) and negates them if that sign is negative.
pub fn normalize_positive(set: &NumberSet) -> (NumberSet, bool) {
    let positive = set.filter(|x| x.parameter().is_positive());
    let negative = set.filter(|x| x.parameter().is_negative());
    if negative.len() > positive.len() {
        (negative.negated(), true)
    } else {
        (positive, false)
    }
}

pub fn solymosi_pipeline(input: &NumberSet, options: &EnergyOptions) -> Result<SolymosiReport> {
    if let Some(bad) = input.iter().find(|x| !x.is_invertible()) {
        return Err(Error::NonInvertible(alloc::format!("{bad} in {}", describe(input))));
    }
    let (set, negated) = normalize_positive(input);
    if set.len() < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "need at least 2 elements of one sign, got {} of {}",
            set.len(),
            input.len()
        )));
    }
    let n = set.len();
    let energy = energy_report(&set, options)?;
    let k = multiplicity(&set).max_multiplicity;
    let f: Vec<Rational> = set.iter().map(PlanarNumber::parameter).collect();

    let wanted: BTreeSet<&Rational> = energy.lambda.iter().collect();
    let mut by_lambda: BTreeMap<Rational, Vec<(usize, usize)>> = BTreeMap::new();
    for (xi, fx) in f.iter().enumerate() {
        for (yi, fy) in f.iter().enumerate() {
            let lambda = fy / fx;
            if wanted.contains(&lambda) {
                by_lambda.entry(lambda).or_default().push((xi, yi));
            }
        }
    }
    let on_lines: Vec<Vec<(usize, usize)>> = energy.lambda.iter().map(|l| by_lambda.remove(l).unwrap_or_default()).collect();

    let representatives: Vec<Vec<(usize, usize)>> = on_lines
        .iter()
        .skip(1)
        .map(|line| {
            let mut seen = BTreeSet::new();
            line.iter().copied().filter(|&(xi, _)| seen.insert(&f[xi])).collect()
        })
        .collect();

    let elements = set.elements();
    let mut wedge_sizes = Vec::new();
    let mut expansion_failures = Vec::new();
    let mut union: BTreeSet<(PlanarNumber, PlanarNumber)> = BTreeSet::new();
    let mut wedge_total = 0usize;
    for (i, reps) in representatives.iter().enumerate() {
        let mut wedge = BTreeSet::new();
        for &(x, y) in &on_lines[i] {
            for &(x_, y_) in reps {
                wedge.insert((&elements[x] + &elements[x_], &elements[y] + &elements[y_]));
            }
        }
        if wedge.len() != on_lines[i].len() * reps.len() {
            expansion_failures.push(i);
        }
        wedge_sizes.push(wedge.len());
        wedge_total += wedge.len();
        union.extend(wedge);
    }

    let sumset_size = sumset(&set).len();
    let productset_size = productset(&set).len();
    let chain_sum: u128 = on_lines.windows(2).map(|w| w[0].len() as u128 * w[1].len() as u128).sum();
    let (n128, k128) = (n as u128, k as u128);
    let cover_failures: Vec<usize> = representatives
        .iter()
        .enumerate()
        .filter(|(i, reps)| (reps.len() as u128) * k128 * k128 < on_lines[i + 1].len() as u128)
        .map(|(i, _)| i)
        .collect();
    let e = energy.energy as u128;
    let m = energy.dyadic_class;

    let mut checks = alloc::vec![
        Check::eq("sum of r_div equals n^2", energy.r_div_total() as u128, n128 * n128),
        Check::le("n^4 at most energy times |AA|", n128.pow(4), e * productset_size as u128),
        Check::le(
            "energy at most |Lambda| 2^(2m+2) ceil(log2 n)",
            e,
            energy.lambda.len() as u128 * (1u128 << (2 * m + 2)) * ceil_log2(n as u64) as u128,
        ),
        Check {
            name: "expansion |(P on l_i) + S_i| = |P on l_i| |S_i|",
            holds: expansion_failures.is_empty(),
            detail: alloc::format!("{} wedges, failing {:?}", representatives.len(), expansion_failures),
        },
        Check::eq("wedges pairwise disjoint", union.len(), wedge_total),
        Check {
            name: "|S_i| k^2 >= |P on l_(i+1)|",
            holds: cover_failures.is_empty(),
            detail: alloc::format!("k = {k}, failing {:?}", cover_failures),
        },
        Check::le("chain sum at most |A+A|^2 k^2", chain_sum, (sumset_size as u128).pow(2) * k128 * k128),
    ];
    if let Some(q) = energy.energy_by_quadruples {
        checks.push(Check::eq("quadruple count equals sum of r^2", q, energy.energy));
    }

    let ratio = Rational::from_integer((sumset_size as u128 * sumset_size as u128 * productset_size as u128 * k128 * k128).into())
        / Rational::from_integer(n128.pow(4).into());
    debug_assert!(!ratio.is_zero());

    let wedge = WedgeReport {
        system: set.system(),
        dropped: input.len() - n,
        negated,
        set,
        multiplicity: k,
        dyadic_class: m,
        lambda: energy.lambda.clone(),
        on_lines,
        representatives,
        wedge_sizes,
        sumset_size,
        productset_size,
        chain_sum,
        ratio,
        checks,
    };
    Ok(SolymosiReport { wedge, energy })
}

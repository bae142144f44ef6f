//! Randomized and exhaustive check suites over the library's invariants.

use std::fmt;

use planar_core::experiments::{build_elekes, classify_incidences, solymosi_pipeline, ClassifyOptions};
use planar_core::geometry::constructions::family_configuration;
use planar_core::geometry::family::{pair_rule, shared_members, PairRule};
use planar_core::geometry::{classify_intersection, count_incidences, detect_families, r4_oracle, Line2};
use planar_core::rational::frac;
use planar_core::sets::EnergyOptions;
use planar_core::{NumberSet, PlanarNumber, Rational, System};
use serde::Serialize;

use crate::random::{family_rich_lines, random_invertible_set, random_line_pair, rng, Lattice};
use crate::report::SCHEMA_VERSION;

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: u64,
    pub total: u64,
    pub counterexamples: Vec<String>,
}

impl Assertion {
    pub fn new(name: impl Into<String>) -> Self {
        Assertion { name: name.into(), passed: 0, total: 0, counterexamples: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(describe());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.ok() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}/{}", self.name, self.passed, self.total)?;
        for c in &self.counterexamples {
            write!(f, "\n    counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemmas,
    Elekes,
    Solymosi,
    All,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: Suite,
    pub seed: u64,
    pub passed: bool,
    pub assertions: Vec<Assertion>,
}

impl SuiteReport {
    pub fn new(suite: Suite, seed: u64, assertions: Vec<Assertion>) -> Self {
        let passed = assertions.iter().all(Assertion::ok);
        SuiteReport { schema_version: SCHEMA_VERSION, suite, seed, passed, assertions }
    }
}

pub const SYSTEMS: [System; 2] = [System::Dual, System::Double];

/// Closed-form classification against the elimination oracle on random pairs
/// whose coefficients often coincide.
pub fn random_agreement(system: System, trials: u64, seed: u64) -> Assertion {
    let mut a = Assertion::new(format!("classification agrees with oracle on random {system} pairs"));
    let mut r = rng(seed);
    let lattice = Lattice { bound: 4, max_denominator: 3 };
    for _ in 0..trials {
        let (l1, l2) = random_line_pair(system, &lattice, &mut r);
        let (k1, k2) = (classify_intersection(&l1, &l2), r4_oracle(&l1, &l2));
        a.record(k1 == k2, || format!("{l1} / {l2}: {k1:?} vs {k2:?}"));
    }
    a
}

fn grid_values() -> Vec<Rational> {
    (-4..=4).map(|p| frac(p, 2)).collect()
}

fn slope_from(system: System, c: &[Rational; 4]) -> Line2 {
    Line2::slope(PlanarNumber::new(system, c[0].clone(), c[1].clone()), PlanarNumber::new(system, c[2].clone(), c[3].clone()))
        .expect("single system")
}

/// Every line with coefficient components in `{-2..2}/{1,2}` against each
/// of its 81 neighbours `l + δ`, `δ ∈ {-1,0,1}⁴`, plus all pairs of lines
/// with components in `{-1,0,1}`.
pub fn exhaustive_agreement(system: System) -> Assertion {
    let mut a = Assertion::new(format!("classification agrees with oracle on the exhaustive {system} grid"));
    let values = grid_values();
    let units: Vec<Rational> = (-1..=1).map(|p| frac(p, 1)).collect();
    let tuples = |vals: &[Rational]| -> Vec<[Rational; 4]> {
        let mut out = Vec::new();
        for a in vals {
            for b in vals {
                for c in vals {
                    for d in vals {
                        out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                    }
                }
            }
        }
        out
    };
    let deltas = tuples(&units);
    let mut check = |l1: &Line2, l2: &Line2| {
        let (k1, k2) = (classify_intersection(l1, l2), r4_oracle(l1, l2));
        a.record(k1 == k2, || format!("{l1} / {l2}: {k1:?} vs {k2:?}"));
    };
    for c in tuples(&values) {
        let l1 = slope_from(system, &c);
        for d in &deltas {
            let shifted: [Rational; 4] = std::array::from_fn(|i| &c[i] + &d[i]);
            check(&l1, &slope_from(system, &shifted));
        }
    }
    let small: Vec<Line2> = deltas.iter().map(|c| slope_from(system, c)).collect();
    for l1 in &small {
        for l2 in &small {
            check(l1, l2);
        }
    }
    a
}

/// Counts of family pairs checked per bound, for coverage reporting.
pub type RuleCoverage = std::collections::BTreeMap<&'static str, u64>;

/// Shared-line bounds over all pairs of families detected in `sets` random
/// family-rich line sets, plus membership consistency of each family.
pub fn family_checks(system: System, sets: u64, lines_per_set: usize, seed: u64) -> (Assertion, Assertion, RuleCoverage) {
    let mut bounds = Assertion::new(format!("shared-line bounds between {system} families"));
    let mut membership = Assertion::new(format!("{system} family membership is exact"));
    let mut coverage: RuleCoverage = PairRule::ALL
        .iter()
        .filter(|r| r.name().starts_with(if system == System::Dual { "dual" } else { "double" }))
        .map(|r| (r.name(), 0))
        .collect();
    let mut r = rng(seed);
    for _ in 0..sets {
        let lines = family_rich_lines(system, lines_per_set, &mut r);
        let families = detect_families(&lines, 2);
        for f in &families {
            let ok = lines.iter().enumerate().all(|(i, l)| {
                let member = f.members.binary_search(&i).is_ok();
                let contains = l.flat().is_some_and(|flat| flat.contains_flat(&f.axis));
                f.admits(l) == member && contains == member
            });
            membership.record(ok, || format!("family {:?} in {} lines", f.members, lines.len()));
        }
        for (x, f) in families.iter().enumerate() {
            for g in &families[x + 1..] {
                let rule = pair_rule(f, g).expect("same system");
                *coverage.entry(rule.name()).or_default() += 1;
                let shared = shared_members(f, g);
                bounds.record(shared <= rule.bound(), || {
                    format!("{}: families {:?} and {:?} share {shared}", rule.name(), f.members, g.members)
                });
            }
        }
    }
    (bounds, membership, coverage)
}

/// Every point of the explicit family constructions lies on every line.
pub fn family_construction_incidences(system: System, points: usize, lines: usize) -> Assertion {
    let mut a = Assertion::new(format!("{system} family construction: {points} points x {lines} lines"));
    let (ps, ls) = family_configuration(system, points, lines);
    let count = count_incidences(&ps, &ls);
    a.record(count == (points * lines) as u64, || format!("{count} incidences"));
    a
}

pub fn lemmas(trials: u64, seed: u64, exhaustive: bool) -> Vec<Assertion> {
    let mut out = Vec::new();
    for (i, system) in SYSTEMS.into_iter().enumerate() {
        out.push(random_agreement(system, trials, seed.wrapping_add(i as u64)));
        if exhaustive {
            out.push(exhaustive_agreement(system));
        }
        let (bounds, membership, _) = family_checks(system, (trials / 100).max(1), 40, seed.wrapping_add(10 + i as u64));
        out.push(bounds);
        out.push(membership);
        out.push(family_construction_incidences(system, 20, 20));
    }
    out
}

/// Elekes configurations of random invertible sets: the lower bound with its
/// witnesses, line distinctness, and the special/standard partition.
pub fn elekes(n: usize, trials: u64, seed: u64, classify: bool) -> anyhow::Result<Vec<Assertion>> {
    let mut out = Vec::new();
    for (i, system) in SYSTEMS.into_iter().enumerate() {
        let n3 = (n as u64).pow(3);
        let mut bound = Assertion::new(format!("{system} I(P,L) >= {n3} with witnesses, n = {n}"));
        let mut distinct = Assertion::new(format!("{system} |L| = n^2"));
        let mut partition = Assertion::new(format!("{system} special + standard = I and exponent constraints"));
        let mut r = rng(seed.wrapping_add(i as u64));
        for _ in 0..trials {
            let a = random_invertible_set(system, n, &Lattice::default(), &mut r)
                .ok_or_else(|| anyhow::anyhow!("lattice too small for {n} elements"))?;
            let cfg = build_elekes(&a)?;
            bound.record(cfg.incidences >= n3 && cfg.witnesses == n3, || format!("{a:?}: I = {}", cfg.incidences));
            distinct.record(cfg.distinct_lines == n * n, || format!("{} distinct lines", cfg.distinct_lines));
            if classify {
                let stats = classify_incidences(&cfg, &ClassifyOptions { include_negative: true, ..Default::default() })?;
                partition.record(stats.all_hold(), || {
                    let bad: Vec<_> = stats.checks.iter().filter(|c| !c.holds).map(|c| format!("{}: {}", c.name, c.detail)).collect();
                    bad.join("; ")
                });
            }
        }
        out.push(bound);
        out.push(distinct);
        if classify {
            out.push(partition);
        }
    }
    Ok(out)
}

/// Energy/wedge chain on the given sets. Each check becomes one assertion
/// counted over all sets.
pub fn solymosi_on(sets: &[NumberSet], label: &str) -> anyhow::Result<Vec<Assertion>> {
    let mut by_name: Vec<Assertion> = Vec::new();
    for a in sets {
        let report = solymosi_pipeline(a, &EnergyOptions::default())?;
        for check in &report.wedge.checks {
            let pos = match by_name.iter().position(|x| x.name.ends_with(check.name)) {
                Some(p) => p,
                None => {
                    by_name.push(Assertion::new(format!("{label}: {}", check.name)));
                    by_name.len() - 1
                }
            };
            by_name[pos].record(check.holds, || check.detail.clone());
        }
    }
    Ok(by_name)
}

pub fn solymosi_random(n: usize, trials: u64, seed: u64) -> anyhow::Result<Vec<Assertion>> {
    let mut out = Vec::new();
    for (i, system) in SYSTEMS.into_iter().enumerate() {
        let mut r = rng(seed.wrapping_add(i as u64));
        let mut sets = Vec::new();
        while (sets.len() as u64) < trials {
            let a = random_invertible_set(system, n, &Lattice::default(), &mut r)
                .ok_or_else(|| anyhow::anyhow!("lattice too small for {n} elements"))?;
            // the pipeline needs two elements of one sign
            if planar_core::experiments::solymosi::normalize_positive(&a).0.len() >= 2 {
                sets.push(a);
            }
        }
        out.extend(solymosi_on(&sets, &format!("{system} random n = {n}"))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lemma_run_passes() {
        for a in lemmas(200, 1, false) {
            assert!(a.ok(), "{a}");
            assert!(a.total > 0, "{a}");
        }
    }

    #[test]
    fn elekes_small() {
        for a in elekes(4, 3, 2, true).unwrap() {
            assert!(a.ok(), "{a}");
        }
    }

    #[test]
    fn solymosi_small() {
        for a in solymosi_random(6, 3, 5).unwrap() {
            assert!(a.ok(), "{a}");
        }
    }
}

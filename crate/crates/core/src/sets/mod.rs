//! Finite sets of dual or double numbers and their additive/multiplicative
//! statistics.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::coloring::bipartite_edge_coloring;
use crate::diag::log_ratio_decimal;
use crate::error::{Error, Result};
use crate::numbers::{Functional, PlanarNumber, System};
use crate::rational::Rational;

mod construct;
mod energy;

pub use construct::{
    double_diagonal_grid, double_null_pair, dual_grid, dual_grid_sides, generate, unit_real_dual, Construction,
    ConstructionKind, GridSides,
};
pub use energy::{energy_report, EnergyOptions, EnergyReport};

/// A deduplicated set of numbers from one system, kept sorted
/// lexicographically by `(re, im)`. That order drives every deterministic
/// choice made downstream (pruning, representatives, iteration).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberSet {
    system: System,
    elements: Vec<PlanarNumber>,
}

impl NumberSet {
    pub fn new<I>(system: System, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = PlanarNumber>,
    {
        let mut elements: Vec<PlanarNumber> = elements.into_iter().collect();
        for e in &elements {
            system.ensure_same(e.system())?;
        }
        elements.sort();
        elements.dedup();
        Ok(NumberSet { system, elements })
    }

    pub fn empty(system: System) -> Self {
        NumberSet { system, elements: Vec::new() }
    }

    fn from_sorted(system: System, elements: Vec<PlanarNumber>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        NumberSet { system, elements }
    }

    pub fn system(&self) -> System {
        self.system
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PlanarNumber] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, PlanarNumber> {
        self.elements.iter()
    }

    pub fn contains(&self, x: &PlanarNumber) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    pub fn index_of(&self, x: &PlanarNumber) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    /// Subset of elements satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&PlanarNumber) -> bool) -> NumberSet {
        let elements = self.elements.iter().filter(|x| keep(x)).cloned().collect();
        NumberSet::from_sorted(self.system, elements)
    }

    /// `{−a : a ∈ A}`.
    pub fn negated(&self) -> NumberSet {
        let mut elements: Vec<PlanarNumber> = self.elements.iter().map(|x| -x).collect();
        elements.reverse();
        NumberSet::from_sorted(self.system, elements)
    }

    pub fn all_invertible(&self) -> bool {
        self.elements.iter().all(PlanarNumber::is_invertible)
    }
}

impl<'a> IntoIterator for &'a NumberSet {
    type Item = &'a PlanarNumber;
    type IntoIter = core::slice::Iter<'a, PlanarNumber>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Op {
    Add,
    Mul,
}

/// Components as small integers when every element has integer components of
/// magnitude below 2⁴⁰; sums and products then fit comfortably in `i128`.
fn small_integer_components(set: &NumberSet) -> Option<Vec<(i128, i128)>> {
    const LIMIT: i64 = 1 << 40;
    set.iter()
        .map(|x| {
            if !x.re().is_integer() || !x.im().is_integer() {
                return None;
            }
            let re = x.re().numer().to_i64()?;
            let im = x.im().numer().to_i64()?;
            (re.abs() < LIMIT && im.abs() < LIMIT).then_some((re as i128, im as i128))
        })
        .collect()
}

fn combine_small(system: System, op: Op, a: (i128, i128), b: (i128, i128)) -> (i128, i128) {
    match op {
        Op::Add => (a.0 + b.0, a.1 + b.1),
        Op::Mul => {
            let re = match system {
                System::Dual => a.0 * b.0,
                System::Double => a.0 * b.0 + a.1 * b.1,
            };
            (re, a.0 * b.1 + a.1 * b.0)
        }
    }
}

fn combine(op: Op, a: &PlanarNumber, b: &PlanarNumber) -> PlanarNumber {
    match op {
        Op::Add => a + b,
        Op::Mul => a * b,
    }
}

fn pairwise(a: &NumberSet, b: &NumberSet, op: Op) -> Result<NumberSet> {
    a.system.ensure_same(b.system)?;
    let system = a.system;
    // Both operations are commutative, so A∘A only needs pairs with i ≤ j.
    let same = a == b;
    if let (Some(xs), Some(ys)) = (small_integer_components(a), small_integer_components(b)) {
        let mut out: BTreeSet<(i128, i128)> = BTreeSet::new();
        for (i, &x) in xs.iter().enumerate() {
            let start = if same { i } else { 0 };
            for &y in &ys[start..] {
                out.insert(combine_small(system, op, x, y));
            }
        }
        let elements = out
            .into_iter()
            .map(|(re, im)| {
                PlanarNumber::new(system, Rational::from_integer(BigInt::from(re)), Rational::from_integer(BigInt::from(im)))
            })
            .collect();
        // (i128, i128) order equals the (re, im) order of integer rationals.
        return Ok(NumberSet::from_sorted(system, elements));
    }
    Ok(pairwise_exact(a, b, op, same))
}

fn pairwise_exact(a: &NumberSet, b: &NumberSet, op: Op, same: bool) -> NumberSet {
    let mut out: BTreeSet<PlanarNumber> = BTreeSet::new();
    for (i, x) in a.iter().enumerate() {
        let start = if same { i } else { 0 };
        for y in &b.elements[start..] {
            out.insert(combine(op, x, y));
        }
    }
    NumberSet::from_sorted(a.system, out.into_iter().collect())
}

/// `A + B`.
pub fn sum_of(a: &NumberSet, b: &NumberSet) -> Result<NumberSet> {
    pairwise(a, b, Op::Add)
}

/// `A · B`.
pub fn product_of(a: &NumberSet, b: &NumberSet) -> Result<NumberSet> {
    pairwise(a, b, Op::Mul)
}

/// `A + A`, including `a + a`.
pub fn sumset(a: &NumberSet) -> NumberSet {
    pairwise(a, a, Op::Add).expect("same system")
}

/// `AA`, including `a · a`.
pub fn productset(a: &NumberSet) -> NumberSet {
    pairwise(a, a, Op::Mul).expect("same system")
}

/// Reference enumeration over all ordered pairs, without the integer kernel
/// or the `i ≤ j` shortcut.
pub fn sumset_reference(a: &NumberSet) -> NumberSet {
    pairwise_ordered(a, Op::Add)
}

/// See [`sumset_reference`].
pub fn productset_reference(a: &NumberSet) -> NumberSet {
    pairwise_ordered(a, Op::Mul)
}

fn pairwise_ordered(a: &NumberSet, op: Op) -> NumberSet {
    let mut out = BTreeSet::new();
    for x in a {
        for y in a {
            out.insert(combine(op, x, y));
        }
    }
    NumberSet::from_sorted(a.system, out.into_iter().collect())
}

/// The functionals whose level sets define multiplicity in a system.
pub fn fiber_functionals(system: System) -> &'static [Functional] {
    match system {
        System::Dual => &[Functional::Re],
        System::Double => &[Functional::DeltaPlus, Functional::DeltaMinus],
    }
}

/// Level-set sizes of one functional over the set.
pub fn fibers(set: &NumberSet, functional: Functional) -> Result<BTreeMap<Rational, usize>> {
    let mut out = BTreeMap::new();
    for x in set {
        *out.entry(x.functional(functional)?).or_insert(0) += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub n: usize,
    /// Largest fiber over all of the system's functionals.
    pub max_multiplicity: usize,
    /// Largest fiber per functional (`Re`, or `Δ⁺` then `Δ⁻`).
    pub per_functional: Vec<(Functional, usize)>,
    /// `log k / log n` to 50 decimals; absent when `k = 0` or `n ≤ 1`.
    pub alpha: Option<String>,
}

pub fn multiplicity(set: &NumberSet) -> MultiplicityProfile {
    let per_functional: Vec<(Functional, usize)> = fiber_functionals(set.system)
        .iter()
        .map(|&f| {
            let k = fibers(set, f).expect("functional matches system").values().copied().max().unwrap_or(0);
            (f, k)
        })
        .collect();
    let k = per_functional.iter().map(|p| p.1).max().unwrap_or(0);
    MultiplicityProfile {
        n: set.len(),
        max_multiplicity: k,
        per_functional,
        alpha: log_ratio_decimal(k as u64, set.len() as u64),
    }
}

/// Drops every zero divisor.
pub fn prune_noninvertible(set: &NumberSet) -> NumberSet {
    set.filter(PlanarNumber::is_invertible)
}

/// A subset of multiplicity at most `k` with at least `|A|·k/k₀` elements,
/// where `k₀` is the current multiplicity.
///
/// Dual sets keep the first `k` elements of every real-part fiber. Double sets
/// are split into `k₀` classes that each meet every `Δ⁺` and `Δ⁻` fiber at most
/// once, and the `k` largest classes are kept.
pub fn prune_to_multiplicity(set: &NumberSet, k: usize) -> Result<NumberSet> {
    if k == 0 {
        return Err(Error::InvalidParameter(String::from("target multiplicity must be at least 1")));
    }
    if multiplicity(set).max_multiplicity <= k {
        return Ok(set.clone());
    }
    match set.system {
        System::Dual => {
            let mut seen: BTreeMap<&Rational, usize> = BTreeMap::new();
            let kept = set
                .iter()
                .filter(|x| {
                    let count = seen.entry(x.re()).or_insert(0);
                    *count += 1;
                    *count <= k
                })
                .cloned()
                .collect();
            Ok(NumberSet::from_sorted(set.system, kept))
        }
        System::Double => {
            let classes = fiber_classes(set.iter().map(|x| (x.delta_plus(), x.delta_minus())));
            let mut by_size: Vec<(usize, usize)> = classes.iter().enumerate().map(|(c, m)| (m.len(), c)).collect();
            by_size.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
            let mut keep = alloc::vec![false; set.len()];
            for &(_, c) in by_size.iter().take(k) {
                for &i in &classes[c] {
                    keep[i] = true;
                }
            }
            let kept = set.iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x.clone()).collect();
            Ok(NumberSet::from_sorted(set.system, kept))
        }
    }
}

/// Splits items keyed by a pair of fiber values into the minimum number of
/// classes such that no class repeats a first key or a second key. Returns
/// item indices per class, each list ascending.
pub(crate) fn fiber_classes<K: Ord + Clone>(keys: impl Iterator<Item = (K, K)>) -> Vec<Vec<usize>> {
    let keys: Vec<(K, K)> = keys.collect();
    let index = |values: Vec<&K>| -> BTreeMap<K, usize> {
        let mut map = BTreeMap::new();
        for v in values {
            let next = map.len();
            map.entry(v.clone()).or_insert(next);
        }
        map
    };
    let left = index(keys.iter().map(|k| &k.0).collect());
    let right = index(keys.iter().map(|k| &k.1).collect());
    let edges: Vec<(usize, usize)> = keys.iter().map(|(a, b)| (left[a], right[b])).collect();
    let (colors, count) = bipartite_edge_coloring(left.len(), right.len(), &edges);
    let mut classes = alloc::vec![Vec::new(); count];
    for (i, c) in colors.into_iter().enumerate() {
        classes[c].push(i);
    }
    classes
}

impl core::fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let alpha = self.alpha.as_deref().unwrap_or("undefined");
        write!(f, "n={} k={} alpha={}", self.n, self.max_multiplicity, alpha)
    }
}

/// Short human description used in error messages.
pub(crate) fn describe(set: &NumberSet) -> String {
    format!("{} set of {} elements", set.system, set.len())
}

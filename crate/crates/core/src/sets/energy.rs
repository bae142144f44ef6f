//! Multiplicative energy and the ratio/product representation functions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{describe, NumberSet};
use crate::error::{Error, Result};
use crate::numbers::PlanarNumber;
use crate::rational::{floor_log2, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnergyOptions {
    /// Largest `|A|` for which the `O(n⁴)` quadruple count also runs.
    pub quadruple_cutoff: usize,
}

impl Default for EnergyOptions {
    fn default() -> Self {
        EnergyOptions { quadruple_cutoff: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnergyReport {
    pub n: usize,
    /// `E^×(A) = Σ_t r(t)²` over exact products `t`.
    pub energy: u64,
    /// `|{(a,b,c,d) ∈ A⁴ : ab = cd}|`, when `n ≤ quadruple_cutoff`.
    pub energy_by_quadruples: Option<u64>,
    /// Number of distinct products, i.e. `|AA|`.
    pub distinct_products: usize,
    /// `r^×(λ)`: ordered pairs whose product has parameter `λ`.
    pub r_times: BTreeMap<Rational, u64>,
    /// `r^÷(λ)`: ordered pairs whose quotient has parameter `λ`.
    pub r_div: BTreeMap<Rational, u64>,
    /// `Σ r^÷(λ)²` per dyadic class `m` (`2^m ≤ r^÷(λ) < 2^(m+1)`).
    pub class_sums: BTreeMap<u32, u128>,
    /// Class maximising `Σ r^÷(λ)²`, ties to the smaller `m`.
    pub dyadic_class: u32,
    /// Parameters `λ` of the selected class, ascending.
    pub lambda: Vec<Rational>,
}

impl EnergyReport {
    /// `Σ_λ r^÷(λ)`, which equals `n²`.
    pub fn r_div_total(&self) -> u64 {
        self.r_div.values().sum()
    }

    /// `Σ_λ r^÷(λ)²`, an upper bound for the energy.
    pub fn r_div_square_sum(&self) -> u128 {
        self.class_sums.values().sum()
    }
}

/// Energy statistics of a set of invertible numbers. The parameter of a
/// number is `Re` on 𝔻 and `Δ⁺` on 𝕊.
pub fn energy_report(set: &NumberSet, options: &EnergyOptions) -> Result<EnergyReport> {
    if let Some(bad) = set.iter().find(|x| !x.is_invertible()) {
        return Err(Error::NonInvertible(alloc::format!("{bad} in {}", describe(set))));
    }
    let elems = set.elements();
    let n = elems.len();

    let mut products: Vec<PlanarNumber> = Vec::with_capacity(n * n);
    for a in elems {
        for b in elems {
            products.push(a * b);
        }
    }

    let mut r_times = BTreeMap::new();
    for t in &products {
        *r_times.entry(t.parameter()).or_insert(0u64) += 1;
    }

    let mut sorted = products.clone();
    sorted.sort_unstable();
    let mut energy = 0u64;
    let mut distinct_products = 0usize;
    for run in sorted.chunk_by(|x, y| x == y) {
        let r = run.len() as u64;
        energy += r * r;
        distinct_products += 1;
    }

    let energy_by_quadruples = (n <= options.quadruple_cutoff).then(|| {
        let mut count = 0u64;
        for left in &products {
            for right in &products {
                if left == right {
                    count += 1;
                }
            }
        }
        count
    });

    let inverses: Vec<PlanarNumber> = elems.iter().map(|x| x.inverse().expect("checked invertible")).collect();
    let mut r_div = BTreeMap::new();
    for a in elems {
        for inv in &inverses {
            *r_div.entry((a * inv).parameter()).or_insert(0u64) += 1;
        }
    }

    let mut class_sums: BTreeMap<u32, u128> = BTreeMap::new();
    for &r in r_div.values() {
        *class_sums.entry(floor_log2(r)).or_insert(0) += (r as u128) * (r as u128);
    }
    let dyadic_class = class_sums
        .iter()
        .fold(None::<(u32, u128)>, |best, (&m, &s)| match best {
            Some((_, bs)) if bs >= s => best,
            _ => Some((m, s)),
        })
        .map(|(m, _)| m)
        .unwrap_or(0);
    let lambda = r_div
        .iter()
        .filter(|(_, &r)| floor_log2(r) == dyadic_class)
        .map(|(l, _)| l.clone())
        .collect();

    Ok(EnergyReport {
        n,
        energy,
        energy_by_quadruples,
        distinct_products,
        r_times,
        r_div,
        class_sums,
        dyadic_class,
        lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::System;
    use crate::rational::int;
    use crate::sets::unit_real_dual;

    #[test]
    fn unit_real_four() {
        let a = unit_real_dual(4);
        let rep = energy_report(&a, &EnergyOptions::default()).unwrap();
        assert_eq!(rep.r_div.len(), 1);
        assert_eq!(rep.r_div[&int(1)], 16);
        assert_eq!(rep.energy, 44);
        assert_eq!(rep.energy_by_quadruples, Some(44));
        assert_eq!(rep.distinct_products, 7);
        assert_eq!(rep.dyadic_class, 4);
        assert_eq!(rep.lambda, alloc::vec![int(1)]);
    }

    #[test]
    fn singleton() {
        let a = NumberSet::new(System::Double, [PlanarNumber::from_ints(System::Double, 3, 1)]).unwrap();
        let rep = energy_report(&a, &EnergyOptions::default()).unwrap();
        assert_eq!(rep.energy, 1);
        assert_eq!(rep.energy_by_quadruples, Some(1));
        assert_eq!(rep.r_div_total(), 1);
    }

    #[test]
    fn rejects_zero_divisors() {
        let a = NumberSet::new(System::Dual, [PlanarNumber::from_ints(System::Dual, 0, 1)]).unwrap();
        assert!(matches!(energy_report(&a, &EnergyOptions::default()), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn cutoff_skips_quadruples() {
        let a = unit_real_dual(5);
        let rep = energy_report(&a, &EnergyOptions { quadruple_cutoff: 4 }).unwrap();
        assert!(rep.energy_by_quadruples.is_none());
    }
}

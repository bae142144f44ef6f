//! Seeded random inputs drawn from a bounded rational lattice.

use std::collections::BTreeSet;

use planar_core::geometry::Line2;
use planar_core::rational::frac;
use planar_core::{NumberSet, PlanarNumber, Rational, System};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rationals `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ max_denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub bound: i64,
    pub max_denominator: i64,
}

impl Default for Lattice {
    fn default() -> Self {
        Lattice { bound: 20, max_denominator: 1 }
    }
}

impl Lattice {
    pub fn integers(bound: i64) -> Self {
        Lattice { bound, max_denominator: 1 }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Rational {
        let p = rng.random_range(-self.bound..=self.bound);
        let q = rng.random_range(1..=self.max_denominator.max(1));
        frac(p, q)
    }

    pub fn number(&self, system: System, rng: &mut impl Rng) -> PlanarNumber {
        PlanarNumber::new(system, self.sample(rng), self.sample(rng))
    }
}

/// `n` distinct invertible numbers. Fails if the lattice is too small to
/// supply them.
pub fn random_invertible_set(system: System, n: usize, lattice: &Lattice, rng: &mut impl Rng) -> Option<NumberSet> {
    let mut chosen = BTreeSet::new();
    let mut attempts = 0usize;
    while chosen.len() < n {
        attempts += 1;
        if attempts > 1000 * (n + 1) {
            return None;
        }
        let x = lattice.number(system, rng);
        if x.is_invertible() {
            chosen.insert(x);
        }
    }
    Some(NumberSet::new(system, chosen).expect("single system"))
}

pub fn random_slope_line(system: System, lattice: &Lattice, rng: &mut impl Rng) -> Line2 {
    Line2::slope(lattice.number(system, rng), lattice.number(system, rng)).expect("single system")
}

/// A random slope line plus a second one built from it by keeping, shifting or
/// negating each coefficient component, so coincidences between components
/// (and hence every intersection type) occur often.
pub fn random_line_pair(system: System, lattice: &Lattice, rng: &mut impl Rng) -> (Line2, Line2) {
    let first = random_slope_line(system, lattice, rng);
    let (a, b) = first.as_slope().expect("slope form");
    let parts = [a.re(), a.im(), b.re(), b.im()];
    let mut v: Vec<Rational> = Vec::with_capacity(4);
    for x in parts {
        let shift = frac(rng.random_range(-2..=2), 1);
        v.push(match rng.random_range(0..4) {
            0 | 1 => x.clone(),
            2 => x + shift,
            _ => -x.clone() + shift,
        });
    }
    let second = Line2::slope(PlanarNumber::new(system, v[0].clone(), v[1].clone()), PlanarNumber::new(system, v[2].clone(), v[3].clone()))
        .expect("single system");
    (first, second)
}

fn small(rng: &mut impl Rng, r: i64) -> Rational {
    frac(rng.random_range(-r..=r), 1)
}

/// Slope lines whose coefficients come from a small box, so that many share
/// real lines / line parameters and many triples share an ℝ⁴ line. Distinct.
pub fn family_rich_lines(system: System, count: usize, rng: &mut impl Rng) -> Vec<Line2> {
    let mut lines = BTreeSet::new();
    while lines.len() < count {
        let (a1, a2, b1, b2) = match system {
            // few real lines, several imaginary parts on each
            System::Dual => (small(rng, 1), small(rng, 3), small(rng, 1), small(rng, 3)),
            // components from Δ± values with a few choices each
            System::Double => {
                let (p, m, q, r) = (small(rng, 2), small(rng, 2), small(rng, 2), small(rng, 2));
                let half = frac(1, 2);
                ((&p + &m) * &half, (&p - &m) * &half, (&q + &r) * &half, (&q - &r) * &half)
            }
        };
        lines.insert(Line2::slope(PlanarNumber::new(system, a1, a2), PlanarNumber::new(system, b1, b2)).expect("single system"));
    }
    lines.into_iter().collect()
}

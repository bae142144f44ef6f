//! Extremal constructions with small sumsets and product sets.

use alloc::format;
use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Signed};

use super::NumberSet;
use crate::error::{Error, Result};
use crate::numbers::{PlanarNumber, System};
use crate::rational::{int, round_rational_power, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstructionKind {
    /// `{1 + mε : 1 ≤ m ≤ n}`: every element has real part 1.
    UnitRealDual,
    /// `{a₁ + a₂ε : 1 ≤ a₁ ≤ n^(1−α), 1 ≤ a₂ ≤ n^α}`.
    DualGrid,
    /// `A = {m + mj}`, `B = {m − mj}` with `AB = {0}`.
    DoubleNullPair,
    /// `{u + vj : Δ⁺ = p ∈ [1, n^(1−α)], Δ⁻ = q ∈ [1, n^α]}`. There is no
    /// grid construction for double numbers in the literature; this one
    /// controls both fiber families by placing the integer grid in
    /// `(Δ⁺, Δ⁻)` coordinates, so its multiplicity is the larger side.
    DoubleDiagonalGrid,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 4] = [
        ConstructionKind::UnitRealDual,
        ConstructionKind::DualGrid,
        ConstructionKind::DoubleNullPair,
        ConstructionKind::DoubleDiagonalGrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::UnitRealDual => "unit-real-dual",
            ConstructionKind::DualGrid => "dual-grid",
            ConstructionKind::DoubleNullPair => "double-null-pair",
            ConstructionKind::DoubleDiagonalGrid => "double-diagonal-grid",
        }
    }

    pub fn system(self) -> System {
        match self {
            ConstructionKind::UnitRealDual | ConstructionKind::DualGrid => System::Dual,
            ConstructionKind::DoubleNullPair | ConstructionKind::DoubleDiagonalGrid => System::Double,
        }
    }

    pub fn takes_alpha(self) -> bool {
        matches!(self, ConstructionKind::DualGrid | ConstructionKind::DoubleDiagonalGrid)
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        ConstructionKind::ALL
            .into_iter()
            .find(|k| k.name() == wanted)
            .ok_or_else(|| Error::Parse(format!("unknown construction `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Single(NumberSet),
    Pair(NumberSet, NumberSet),
}

impl Construction {
    /// The (first) set.
    pub fn primary(&self) -> &NumberSet {
        match self {
            Construction::Single(a) | Construction::Pair(a, _) => a,
        }
    }
}

/// Side lengths of a grid construction: `columns` distinct fiber values of the
/// main functional, `rows` elements per fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSides {
    pub columns: u64,
    pub rows: u64,
}

/// `n^(1−α)` and `n^α`, each rounded to the nearest integer and at least 1.
pub fn dual_grid_sides(n: u64, alpha: &Rational) -> Result<GridSides> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("n must be positive")));
    }
    let columns = round_rational_power(n, &(Rational::one() - alpha)).max(1);
    let rows = round_rational_power(n, alpha).max(1);
    Ok(GridSides { columns, rows })
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() || *alpha > Rational::one() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} is outside [0, 1]")));
    }
    Ok(())
}

pub fn unit_real_dual(n: u64) -> NumberSet {
    let elements = (1..=n as i64).map(|m| PlanarNumber::from_ints(System::Dual, 1, m));
    NumberSet::new(System::Dual, elements).expect("dual elements")
}

pub fn dual_grid(n: u64, alpha: &Rational) -> Result<NumberSet> {
    let sides = dual_grid_sides(n, alpha)?;
    let elements = (1..=sides.columns as i64)
        .flat_map(|a1| (1..=sides.rows as i64).map(move |a2| PlanarNumber::from_ints(System::Dual, a1, a2)));
    NumberSet::new(System::Dual, elements)
}

pub fn double_null_pair(n: u64) -> (NumberSet, NumberSet) {
    let a = (1..=n as i64).map(|m| PlanarNumber::from_ints(System::Double, m, m));
    let b = (1..=n as i64).map(|m| PlanarNumber::from_ints(System::Double, m, -m));
    (NumberSet::new(System::Double, a).expect("double"), NumberSet::new(System::Double, b).expect("double"))
}

pub fn double_diagonal_grid(n: u64, alpha: &Rational) -> Result<NumberSet> {
    let sides = dual_grid_sides(n, alpha)?;
    let elements = (1..=sides.columns as i64).flat_map(|p| {
        (1..=sides.rows as i64).map(move |q| PlanarNumber::double_from_deltas(&int(p), &int(q)))
    });
    NumberSet::new(System::Double, elements)
}

/// Builds a construction by kind. `alpha` is required exactly for the grid
/// kinds.
pub fn generate(kind: ConstructionKind, n: u64, alpha: Option<&Rational>) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("n must be positive")));
    }
    match (kind.takes_alpha(), alpha) {
        (true, None) => return Err(Error::InvalidParameter(format!("{kind} needs alpha"))),
        (false, Some(_)) => return Err(Error::InvalidParameter(format!("{kind} does not take alpha"))),
        _ => {}
    }
    Ok(match kind {
        ConstructionKind::UnitRealDual => Construction::Single(unit_real_dual(n)),
        ConstructionKind::DualGrid => Construction::Single(dual_grid(n, alpha.unwrap())?),
        ConstructionKind::DoubleNullPair => {
            let (a, b) = double_null_pair(n);
            Construction::Pair(a, b)
        }
        ConstructionKind::DoubleDiagonalGrid => Construction::Single(double_diagonal_grid(n, alpha.unwrap())?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::sets::{multiplicity, product_of, productset, sumset};

    #[test]
    fn unit_real() {
        let a = unit_real_dual(100);
        assert_eq!(a.len(), 100);
        assert_eq!(sumset(&a).len(), 199);
        assert_eq!(productset(&a).len(), 199);
        assert_eq!(multiplicity(&a).max_multiplicity, 100);
    }

    #[test]
    fn grid() {
        let a = dual_grid(64, &frac(1, 2)).unwrap();
        assert_eq!(a.len(), 64);
        assert_eq!(sumset(&a).len(), 225);
        assert_eq!(multiplicity(&a).max_multiplicity, 8);
        // AA sits in {m₁ + m₂ε : 1 ≤ m₁ ≤ n^(2−2α), 2 ≤ m₂ ≤ 2n}
        for x in productset(&a).iter() {
            assert!(*x.re() >= int(1) && *x.re() <= int(64), "{x}");
            assert!(*x.im() >= int(2) && *x.im() <= int(128), "{x}");
        }
        assert!(dual_grid(64, &frac(3, 2)).is_err());
        assert!(dual_grid(64, &frac(-1, 2)).is_err());
    }

    #[test]
    fn null_pair() {
        let (a, b) = double_null_pair(20);
        let ab = product_of(&a, &b).unwrap();
        assert_eq!(ab.len(), 1);
        assert!(ab.elements()[0].is_zero());
    }

    #[test]
    fn diagonal_grid_multiplicity() {
        let a = double_diagonal_grid(64, &frac(3, 4)).unwrap();
        // columns = 64^(1/4) ≈ 2.83 -> 3, rows = 64^(3/4) ≈ 22.6 -> 23
        assert_eq!(a.len(), 3 * 23);
        let m = multiplicity(&a);
        assert_eq!(m.per_functional[0].1, 23);
        assert_eq!(m.per_functional[1].1, 3);
    }

    #[test]
    fn generate_checks_params() {
        assert!(generate(ConstructionKind::DualGrid, 16, None).is_err());
        assert!(generate(ConstructionKind::UnitRealDual, 16, Some(&frac(1, 2))).is_err());
        assert!(generate(ConstructionKind::UnitRealDual, 0, None).is_err());
        assert!(matches!(generate(ConstructionKind::DoubleNullPair, 3, None).unwrap(), Construction::Pair(..)));
        assert_eq!("dual_grid".parse::<ConstructionKind>().unwrap(), ConstructionKind::DualGrid);
        assert!("grid".parse::<ConstructionKind>().is_err());
    }
}

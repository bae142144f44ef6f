//! Dual and double numbers with exact rational components.
//!
//! A [`PlanarNumber`] is `re + im·u` where the unit `u` is `ε` with `ε² = 0`
//! (dual) or `j` with `j² = 1` (double). Arithmetic between different systems
//! is a usage error: the checked methods return [`Error::SystemMismatch`],
//! the operator impls panic.

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum System {
    /// `a₁ + a₂ε`, `ε² = 0`.
    Dual,
    /// `a₁ + a₂j`, `j² = 1` (split-complex).
    Double,
}

impl System {
    /// The character used for the imaginary unit in serialized numbers.
    pub fn unit(self) -> char {
        match self {
            System::Dual => 'e',
            System::Double => 'j',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            System::Dual => "dual",
            System::Double => "double",
        }
    }

    pub fn ensure_same(self, other: System) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SystemMismatch { left: self, right: other })
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for System {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dual" | "d" => Ok(System::Dual),
            "double" | "split-complex" | "s" => Ok(System::Double),
            other => Err(Error::Parse(format!("unknown number system `{other}`"))),
        }
    }
}

/// Real-valued functionals that are ring homomorphisms `𝔻 → ℝ` or `𝕊 → ℝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Functional {
    /// Real part, dual numbers only.
    Re,
    /// `a₁ + a₂`, double numbers only.
    DeltaPlus,
    /// `a₁ − a₂`, double numbers only.
    DeltaMinus,
}

impl Functional {
    fn name(self) -> &'static str {
        match self {
            Functional::Re => "Re",
            Functional::DeltaPlus => "Δ+",
            Functional::DeltaMinus => "Δ-",
        }
    }

    /// The functional used as "real part" of a system: `Re` on 𝔻 and `Δ⁺` on 𝕊.
    pub fn parameter(system: System) -> Functional {
        match system {
            System::Dual => Functional::Re,
            System::Double => Functional::DeltaPlus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanarNumber {
    system: System,
    re: Rational,
    im: Rational,
}

impl PlanarNumber {
    pub fn new(system: System, re: Rational, im: Rational) -> Self {
        PlanarNumber { system, re, im }
    }

    pub fn dual(re: Rational, im: Rational) -> Self {
        Self::new(System::Dual, re, im)
    }

    pub fn double(re: Rational, im: Rational) -> Self {
        Self::new(System::Double, re, im)
    }

    /// Integer shorthand, mostly for tests and constructions.
    pub fn from_ints(system: System, re: i64, im: i64) -> Self {
        Self::new(system, crate::rational::int(re), crate::rational::int(im))
    }

    pub fn zero(system: System) -> Self {
        Self::new(system, Rational::zero(), Rational::zero())
    }

    pub fn one(system: System) -> Self {
        Self::new(system, Rational::one(), Rational::zero())
    }

    pub fn from_real(system: System, re: Rational) -> Self {
        Self::new(system, re, Rational::zero())
    }

    pub fn system(&self) -> System {
        self.system
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.system.ensure_same(other.system)?;
        Ok(Self::new(self.system, &self.re + &other.re, &self.im + &other.im))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.system.ensure_same(other.system)?;
        Ok(Self::new(self.system, &self.re - &other.re, &self.im - &other.im))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.system.ensure_same(other.system)?;
        let (a1, a2, b1, b2) = (&self.re, &self.im, &other.re, &other.im);
        let re = match self.system {
            System::Dual => a1 * b1,
            System::Double => a1 * b1 + a2 * b2,
        };
        let im = a1 * b2 + a2 * b1;
        Ok(Self::new(self.system, re, im))
    }

    /// `a₁ ≠ 0` on 𝔻, `a₁² ≠ a₂²` on 𝕊.
    pub fn is_invertible(&self) -> bool {
        match self.system {
            System::Dual => !self.re.is_zero(),
            System::Double => self.re.abs() != self.im.abs(),
        }
    }

    /// `(a₁ − a₂u) / N(a)` where `N = a₁²` on 𝔻 and `a₁² − a₂²` on 𝕊.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NonInvertible(self.to_string()));
        }
        let norm = match self.system {
            System::Dual => &self.re * &self.re,
            System::Double => &self.re * &self.re - &self.im * &self.im,
        };
        Ok(Self::new(self.system, &self.re / &norm, -&self.im / &norm))
    }

    /// `self · other⁻¹`.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inverse()?)
    }

    /// Multiplication by a real scalar.
    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.system, &self.re * factor, &self.im * factor)
    }

    pub fn functional(&self, which: Functional) -> Result<Rational> {
        match (self.system, which) {
            (System::Dual, Functional::Re) => Ok(self.re.clone()),
            (System::Double, Functional::DeltaPlus) => Ok(&self.re + &self.im),
            (System::Double, Functional::DeltaMinus) => Ok(&self.re - &self.im),
            (system, functional) => Err(Error::WrongFunctional { system, functional: functional.name() }),
        }
    }

    /// `Re` for dual numbers, `Δ⁺` for double numbers.
    pub fn parameter(&self) -> Rational {
        match self.system {
            System::Dual => self.re.clone(),
            System::Double => &self.re + &self.im,
        }
    }

    /// `Δ⁺(a) = a₁ + a₂`, defined for any system as a raw combination.
    pub(crate) fn delta_plus(&self) -> Rational {
        &self.re + &self.im
    }

    /// `Δ⁻(a) = a₁ − a₂`.
    pub(crate) fn delta_minus(&self) -> Rational {
        &self.re - &self.im
    }

    /// The double number with `Δ⁺ = plus` and `Δ⁻ = minus`.
    pub fn double_from_deltas(plus: &Rational, minus: &Rational) -> Self {
        let two = crate::rational::int(2);
        Self::double((plus + minus) / &two, (plus - minus) / two)
    }

    pub fn to_matrix(&self) -> Mat2 {
        let (a1, a2) = (self.re.clone(), self.im.clone());
        let lower_left = match self.system {
            System::Dual => Rational::zero(),
            System::Double => a2.clone(),
        };
        Mat2 { entries: [[a1.clone(), a2], [lower_left, a1]] }
    }

    /// Parses `re±im<unit>`, `im<unit>` or, when `system` is given, a bare
    /// real. The unit is `e`/`ε` for dual and `j` for double numbers.
    pub fn parse(text: &str, system: Option<System>) -> Result<Self> {
        let t: alloc::string::String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("invalid number `{text}`: {why}"));
        if t.is_empty() {
            return Err(bad("empty"));
        }
        let last = t.chars().last().unwrap();
        let unit_system = match last {
            'e' | 'ε' => Some(System::Dual),
            'j' => Some(System::Double),
            _ => None,
        };
        let system = match (unit_system, system) {
            (Some(found), Some(expected)) if found != expected => {
                return Err(Error::SystemMismatch { left: expected, right: found })
            }
            (Some(s), _) | (None, Some(s)) => s,
            (None, None) => return Err(bad("missing unit `e` or `j`")),
        };
        let Some(_) = unit_system else {
            return Ok(Self::from_real(system, parse_rational(&t)?));
        };
        let body = &t[..t.len() - last.len_utf8()];
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (re_text, im_text) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let im_text = match im_text {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = parse_rational(re_text)?;
        let im = parse_rational(im_text)?;
        Ok(Self::new(system, re, im))
    }
}

impl fmt::Display for PlanarNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}{}", self.re, sign, self.im.abs(), self.system.unit())
    }
}

impl FromStr for PlanarNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, None)
    }
}

impl Add for &PlanarNumber {
    type Output = PlanarNumber;

    fn add(self, rhs: &PlanarNumber) -> PlanarNumber {
        self.try_add(rhs).expect("addition of numbers from different systems")
    }
}

impl Sub for &PlanarNumber {
    type Output = PlanarNumber;

    fn sub(self, rhs: &PlanarNumber) -> PlanarNumber {
        self.try_sub(rhs).expect("subtraction of numbers from different systems")
    }
}

impl Mul for &PlanarNumber {
    type Output = PlanarNumber;

    fn mul(self, rhs: &PlanarNumber) -> PlanarNumber {
        self.try_mul(rhs).expect("multiplication of numbers from different systems")
    }
}

impl Neg for &PlanarNumber {
    type Output = PlanarNumber;

    fn neg(self) -> PlanarNumber {
        PlanarNumber::new(self.system, -&self.re, -&self.im)
    }
}

/// A 2×2 rational matrix, used as an independent model of the arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub entries: [[Rational; 2]; 2],
}

impl Mat2 {
    pub fn zero() -> Self {
        let z = Rational::zero;
        Mat2 { entries: [[z(), z()], [z(), z()]] }
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.entries[r][c] = &self.entries[r][c] + &other.entries[r][c];
            }
        }
        out
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for r in 0..2 {
            for c in 0..2 {
                out.entries[r][c] =
                    &self.entries[r][0] * &other.entries[0][c] + &self.entries[r][1] * &other.entries[1][c];
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn d(re: i64, im: i64) -> PlanarNumber {
        PlanarNumber::from_ints(System::Dual, re, im)
    }

    fn s(re: i64, im: i64) -> PlanarNumber {
        PlanarNumber::from_ints(System::Double, re, im)
    }

    #[test]
    fn addition() {
        assert_eq!(&d(1, 2) + &d(3, 4), d(4, 6));
        assert_eq!(&s(1, 1) + &s(-1, 1), s(0, 2));
        assert_eq!(&d(5, -7) + &PlanarNumber::zero(System::Dual), d(5, -7));
        assert!(matches!(d(1, 1).try_add(&s(1, 1)), Err(Error::SystemMismatch { .. })));
    }

    #[test]
    fn multiplication_matches_matrix_product() {
        // (1+2ε)(3+4ε) through the matrix representation
        let m = d(1, 2).to_matrix().mul(&d(3, 4).to_matrix());
        assert_eq!(m.entries[0][0], int(3));
        assert_eq!(m.entries[0][1], int(10));
        assert_eq!(m.entries[1][0], int(0));
        assert_eq!(&d(1, 2) * &d(3, 4), d(3, 10));
    }

    #[test]
    fn null_product() {
        assert_eq!(&s(1, 1) * &s(1, -1), s(0, 0));
        assert_eq!(&d(4, 9) * &PlanarNumber::one(System::Dual), d(4, 9));
        assert!(d(1, 1).try_mul(&s(1, 1)).is_err());
    }

    #[test]
    fn invertibility() {
        assert!(!d(0, 5).is_invertible());
        assert!(!s(3, 3).is_invertible());
        assert!(!s(3, -3).is_invertible());
        assert!(d(2, 6).is_invertible());
        assert!(s(2, 1).is_invertible());
    }

    #[test]
    fn inverses() {
        let inv = d(2, 6).inverse().unwrap();
        assert_eq!(inv, PlanarNumber::dual(frac(1, 2), frac(-3, 2)));
        assert_eq!(&inv * &d(2, 6), PlanarNumber::one(System::Dual));

        let inv = s(2, 1).inverse().unwrap();
        assert_eq!(inv, PlanarNumber::double(frac(2, 3), frac(-1, 3)));
        assert_eq!(&inv * &s(2, 1), PlanarNumber::one(System::Double));

        assert_eq!(d(1, 0).inverse().unwrap(), d(1, 0));
        assert!(matches!(d(0, 1).inverse(), Err(Error::NonInvertible(_))));
        assert!(s(1, -1).try_div(&s(2, 2)).is_err());
    }

    #[test]
    fn functionals() {
        assert_eq!(d(3, 7).functional(Functional::Re).unwrap(), int(3));
        assert_eq!(s(2, 5).functional(Functional::DeltaPlus).unwrap(), int(7));
        assert_eq!(s(2, 5).functional(Functional::DeltaMinus).unwrap(), int(-3));
        assert!(d(3, 7).functional(Functional::DeltaPlus).is_err());
        assert!(s(3, 7).functional(Functional::Re).is_err());
    }

    #[test]
    fn matrices() {
        let m = d(1, 2).to_matrix();
        assert_eq!(m.entries, [[int(1), int(2)], [int(0), int(1)]]);
        let m = s(1, 2).to_matrix();
        assert_eq!(m.entries, [[int(1), int(2)], [int(2), int(1)]]);
        assert_eq!(PlanarNumber::zero(System::Dual).to_matrix(), Mat2::zero());
    }

    #[test]
    fn text_round_trip() {
        let x = PlanarNumber::dual(frac(1, 2), frac(-3, 2));
        assert_eq!(x.to_string(), "1/2-3/2e");
        assert_eq!("1/2-3/2e".parse::<PlanarNumber>().unwrap(), x);
        assert_eq!(s(4, 6).to_string(), "4+6j");
        assert_eq!("-1+1j".parse::<PlanarNumber>().unwrap(), s(-1, 1));
        assert_eq!("3e".parse::<PlanarNumber>().unwrap(), d(0, 3));
        assert_eq!("-e".parse::<PlanarNumber>().unwrap(), d(0, -1));
        assert_eq!("2 + 5 j".parse::<PlanarNumber>().unwrap(), s(2, 5));
        assert_eq!("1+2ε".parse::<PlanarNumber>().unwrap(), d(1, 2));
        assert_eq!(PlanarNumber::parse("7", Some(System::Double)).unwrap(), s(7, 0));
        assert!("7".parse::<PlanarNumber>().is_err());
        assert!(PlanarNumber::parse("1+2e", Some(System::Double)).is_err());
        assert!("1+xe".parse::<PlanarNumber>().is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(p, q)| frac(p, q))
    }

    fn number(system: System) -> impl Strategy<Value = PlanarNumber> {
        (small(), small()).prop_map(move |(re, im)| PlanarNumber::new(system, re, im))
    }

    fn any_number() -> impl Strategy<Value = (PlanarNumber, PlanarNumber)> {
        prop_oneof![
            (number(System::Dual), number(System::Dual)),
            (number(System::Double), number(System::Double)),
        ]
    }

    proptest! {
        #[test]
        fn matrix_homomorphism((a, b) in any_number()) {
            prop_assert_eq!((&a * &b).to_matrix(), a.to_matrix().mul(&b.to_matrix()));
            prop_assert_eq!((&a + &b).to_matrix(), a.to_matrix().add(&b.to_matrix()));
        }

        #[test]
        fn functionals_are_ring_homomorphisms((a, b) in any_number()) {
            match a.system() {
                System::Dual => {
                    let re = |x: &PlanarNumber| x.functional(Functional::Re).unwrap();
                    prop_assert_eq!(re(&(&a * &b)), re(&a) * re(&b));
                    prop_assert_eq!(re(&(&a + &b)), re(&a) + re(&b));
                }
                System::Double => {
                    for f in [Functional::DeltaPlus, Functional::DeltaMinus] {
                        let g = |x: &PlanarNumber| x.functional(f).unwrap();
                        prop_assert_eq!(g(&(&a * &b)), g(&a) * g(&b));
                        prop_assert_eq!(g(&(&a + &b)), g(&a) + g(&b));
                        if b.is_invertible() {
                            let q = a.try_div(&b).unwrap();
                            prop_assert_eq!(g(&q), g(&a) * g(&b.inverse().unwrap()));
                        }
                    }
                }
            }
        }

        #[test]
        fn double_inverse_is_identity((a, _b) in any_number()) {
            if a.is_invertible() {
                let inv = a.inverse().unwrap();
                prop_assert_eq!(&a * &inv, PlanarNumber::one(a.system()));
                prop_assert_eq!(inv.inverse().unwrap(), a);
            } else {
                prop_assert!(a.inverse().is_err());
            }
        }

        #[test]
        fn difference_invertibility((a, b) in any_number()) {
            let diff = &a - &b;
            let expected_singular = match a.system() {
                System::Dual => a.re() == b.re(),
                System::Double => a.delta_plus() == b.delta_plus() || a.delta_minus() == b.delta_minus(),
            };
            prop_assert_eq!(!diff.is_invertible(), expected_singular);
        }

        #[test]
        fn display_parses_back((a, _b) in any_number()) {
            prop_assert_eq!(a.to_string().parse::<PlanarNumber>().unwrap(), a);
        }
    }
}

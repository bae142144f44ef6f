use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::flat::{row_reduce, AffineFlat4, Equation, Vec4};
use crate::numbers::{PlanarNumber, System};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    x: PlanarNumber,
    y: PlanarNumber,
}

impl Point2 {
    pub fn new(x: PlanarNumber, y: PlanarNumber) -> Result<Self> {
        x.system().ensure_same(y.system())?;
        Ok(Point2 { x, y })
    }

    pub fn system(&self) -> System {
        self.x.system()
    }

    pub fn x(&self) -> &PlanarNumber {
        &self.x
    }

    pub fn y(&self) -> &PlanarNumber {
        &self.y
    }

    /// Coordinates `(x₁, x₂, y₁, y₂)`.
    pub fn r4(&self) -> Vec4 {
        [self.x.re().clone(), self.x.im().clone(), self.y.re().clone(), self.y.im().clone()]
    }

    pub fn from_r4(system: System, v: &Vec4) -> Self {
        Point2 {
            x: PlanarNumber::new(system, v[0].clone(), v[1].clone()),
            y: PlanarNumber::new(system, v[2].clone(), v[3].clone()),
        }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineForm {
    /// `y = a·x + b`
    Slope { a: PlanarNumber, b: PlanarNumber },
    /// `x = b`
    Vertical { b: PlanarNumber },
    /// `a·x + b·y = c` where neither reduction above applies
    General { a: PlanarNumber, b: PlanarNumber, c: PlanarNumber },
}

/// A line in the dual or double plane.
///
/// Constructors normalize: any equation whose `y` coefficient is invertible
/// becomes slope form, one with `b = 0` and invertible `a` becomes vertical,
/// and what is left is a general equation scaled so that equal point sets
/// give equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Line2 {
    form: LineForm,
}

impl Line2 {
    pub fn slope(a: PlanarNumber, b: PlanarNumber) -> Result<Self> {
        a.system().ensure_same(b.system())?;
        Ok(Line2 { form: LineForm::Slope { a, b } })
    }

    pub fn vertical(b: PlanarNumber) -> Self {
        Line2 { form: LineForm::Vertical { b } }
    }

    /// The line `a·x + b·y = c`. Fails when `a = b = 0`.
    pub fn general(a: PlanarNumber, b: PlanarNumber, c: PlanarNumber) -> Result<Self> {
        a.system().ensure_same(b.system())?;
        a.system().ensure_same(c.system())?;
        if a.is_zero() && b.is_zero() {
            return Err(Error::InvalidParameter("a·x + b·y = c needs a or b nonzero".into()));
        }
        if b.is_invertible() {
            let inv = b.inverse()?;
            let slope = -&(&a * &inv);
            return Ok(Line2 { form: LineForm::Slope { a: slope, b: &c * &inv } });
        }
        if a.is_invertible() {
            let inv = a.inverse()?;
            if b.is_zero() {
                return Ok(Line2 { form: LineForm::Vertical { b: &c * &inv } });
            }
            return Ok(Line2 { form: LineForm::General { a: PlanarNumber::one(a.system()), b: &b * &inv, c: &c * &inv } });
        }
        // No invertible coefficient: fix the real scale by the first nonzero
        // component of (a, b).
        let lead = [a.re(), a.im(), b.re(), b.im()]
            .into_iter()
            .find(|v| !v.is_zero())
            .expect("a or b is nonzero")
            .clone();
        let factor = Rational::one() / lead;
        Ok(Line2 { form: LineForm::General { a: a.scale(&factor), b: b.scale(&factor), c: c.scale(&factor) } })
    }

    pub fn form(&self) -> &LineForm {
        &self.form
    }

    pub fn system(&self) -> System {
        match &self.form {
            LineForm::Slope { a, .. } => a.system(),
            LineForm::Vertical { b } => b.system(),
            LineForm::General { a, .. } => a.system(),
        }
    }

    /// `(a, b)` for a slope-form line.
    pub fn as_slope(&self) -> Option<(&PlanarNumber, &PlanarNumber)> {
        match &self.form {
            LineForm::Slope { a, b } => Some((a, b)),
            _ => None,
        }
    }

    /// Coefficients `(a, b, c)` of `a·x + b·y = c`.
    pub fn coefficients(&self) -> (PlanarNumber, PlanarNumber, PlanarNumber) {
        let s = self.system();
        match &self.form {
            LineForm::Slope { a, b } => (-a, PlanarNumber::one(s), b.clone()),
            LineForm::Vertical { b } => (PlanarNumber::one(s), PlanarNumber::zero(s), b.clone()),
            LineForm::General { a, b, c } => (a.clone(), b.clone(), c.clone()),
        }
    }

    /// The two real equations in `(x₁, x₂, y₁, y₂)` obtained by splitting
    /// `a·x + b·y = c` into components.
    pub fn real_equations(&self) -> [Equation; 2] {
        let (a, b, c) = self.coefficients();
        let (a1, a2, b1, b2, c1, c2) = (a.re(), a.im(), b.re(), b.im(), c.re(), c.im());
        let z = Rational::zero;
        match self.system() {
            System::Dual => [
                [a1.clone(), z(), b1.clone(), z(), c1.clone()],
                [a2.clone(), a1.clone(), b2.clone(), b1.clone(), c2.clone()],
            ],
            System::Double => [
                [a1.clone(), a2.clone(), b1.clone(), b2.clone(), c1.clone()],
                [a2.clone(), a1.clone(), b2.clone(), b1.clone(), c2.clone()],
            ],
        }
    }

    /// A line is degenerate when its two real equations have rank below 2, so
    /// its point set is a hyperplane of ℝ⁴ (or empty) rather than a 2-flat.
    pub fn is_degenerate(&self) -> bool {
        let mut rows: Vec<Equation> = self.real_equations().to_vec();
        row_reduce(&mut rows, 4).len() < 2
    }

    /// The point set as a flat of ℝ⁴, or `None` if the equations are
    /// inconsistent.
    pub fn flat(&self) -> Option<AffineFlat4> {
        AffineFlat4::from_equations(&self.real_equations())
    }

    pub fn contains(&self, p: &Point2) -> bool {
        if p.system() != self.system() {
            return false;
        }
        match &self.form {
            LineForm::Slope { a, b } => &(a * &p.x) + b == p.y,
            LineForm::Vertical { b } => p.x == *b,
            LineForm::General { a, b, c } => &(a * &p.x) + &(b * &p.y) == *c,
        }
    }
}

impl fmt::Display for Line2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.form {
            LineForm::Slope { a, b } => write!(f, "y = ({a})x + ({b})"),
            LineForm::Vertical { b } => write!(f, "x = {b}"),
            LineForm::General { a, b, c } => write!(f, "({a})x + ({b})y = {c}"),
        }
    }
}

pub fn incident(p: &Point2, l: &Line2) -> bool {
    l.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(re: i64, im: i64) -> PlanarNumber {
        PlanarNumber::from_ints(System::Dual, re, im)
    }

    fn j(re: i64, im: i64) -> PlanarNumber {
        PlanarNumber::from_ints(System::Double, re, im)
    }

    #[test]
    fn dual_family_point_on_general_line() {
        let line = Line2::general(d(1, 3), d(1, -2), d(2, 1)).unwrap();
        assert!(line.as_slope().is_some());
        let p = Point2::new(d(1, 2), d(1, -2)).unwrap();
        assert!(incident(&p, &line));
    }

    #[test]
    fn double_family_point() {
        let line = Line2::slope(j(0, -1), j(15, 9)).unwrap();
        assert!(incident(&Point2::new(j(0, 3), j(12, 9)).unwrap(), &line));
        assert!(!incident(&Point2::new(j(0, 3), j(15, 9)).unwrap(), &line));
    }

    #[test]
    fn origin_on_diagonal() {
        let line = Line2::slope(d(1, 0), d(0, 0)).unwrap();
        assert!(incident(&Point2::new(d(0, 0), d(0, 0)).unwrap(), &line));
    }

    #[test]
    fn normalization() {
        assert!(matches!(Line2::general(d(2, 1), d(0, 0), d(4, 0)).unwrap().form(), LineForm::Vertical { .. }));
        let g = Line2::general(d(0, 2), d(0, 4), d(6, 0)).unwrap();
        assert_eq!(g, Line2::general(d(0, 1), d(0, 2), d(3, 0)).unwrap());
        assert!(g.is_degenerate());
        assert!(Line2::general(d(0, 0), d(0, 0), d(1, 0)).is_err());
        // a₁ = b₁ = 0 in the dual plane is degenerate; a₁ ≠ 0 is not
        assert!(!Line2::general(d(1, 0), d(0, 1), d(0, 0)).unwrap().is_degenerate());
    }

    #[test]
    fn double_degeneracy() {
        // a = 1+j, b = 2+2j, c = 3+3j: both real equations coincide
        let l = Line2::general(j(1, 1), j(2, 2), j(3, 3)).unwrap();
        assert!(l.is_degenerate());
        assert_eq!(l.flat().unwrap().dim(), 3);
        // c₁ ≠ ±c₂ makes the same left-hand side inconsistent
        let empty = Line2::general(j(1, 1), j(2, 2), j(3, 1)).unwrap();
        assert!(empty.is_degenerate());
        assert!(empty.flat().is_none());
        let l = Line2::general(j(1, 1), j(2, -2), j(0, 0)).unwrap();
        assert!(!l.is_degenerate());
    }

    #[test]
    fn slope_lines_are_two_flats() {
        for l in [Line2::slope(d(3, 1), d(2, 5)).unwrap(), Line2::slope(j(1, 1), j(-2, 7)).unwrap()] {
            let flat = l.flat().unwrap();
            assert_eq!(flat.dim(), 2);
            let x = l.as_slope().unwrap();
            let p = Point2::new(x.1.clone(), &(x.0 * x.1) + x.1).unwrap();
            assert!(flat.contains_point(&p.r4()));
        }
    }
}

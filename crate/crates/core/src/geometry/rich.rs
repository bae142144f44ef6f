//! Rich points of arrangements of real lines.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

/// The real line `a·x + b·y = c`, scaled so the first nonzero of `(a, b)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RealLine {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl RealLine {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(Error::InvalidParameter("a·x + b·y = c needs a or b nonzero".into()));
        };
        let inv = Rational::one() / lead;
        Ok(RealLine { a: a * &inv, b: b * &inv, c: c * &inv })
    }

    /// `y = p·x + q`
    pub fn slope(p: Rational, q: Rational) -> Self {
        Self::new(-p, Rational::one(), q).expect("b = 1")
    }

    pub fn coefficients(&self) -> (&Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c)
    }

    pub fn contains(&self, p: &(Rational, Rational)) -> bool {
        &self.a * &p.0 + &self.b * &p.1 == self.c
    }

    /// The unique common point, if the lines are not parallel.
    pub fn meet(&self, other: &RealLine) -> Option<(Rational, Rational)> {
        let det = &self.a * &other.b - &other.a * &self.b;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &other.b - &other.c * &self.b) / &det;
        let y = (&self.a * &other.c - &other.a * &self.c) / &det;
        Some((x, y))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RichPoints {
    /// Distinct input lines.
    pub lines: usize,
    pub r: usize,
    /// Points on at least `r` lines, with their line counts.
    pub points: BTreeMap<(Rational, Rational), usize>,
}

impl RichPoints {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    /// `n²/r³ + n/r`, the shape of the upper bound, without constant.
    pub fn envelope(&self) -> Rational {
        let n = Rational::from_integer((self.lines as u64).into());
        let r = Rational::from_integer((self.r as u64).into());
        &n * &n / (&r * &r * &r) + n / r
    }
}

/// Points incident to at least `r ≥ 2` of the lines, found among pairwise
/// intersections.
pub fn rich_points(lines: &[RealLine], r: usize) -> Result<RichPoints> {
    if r < 2 {
        return Err(Error::InvalidParameter(alloc::format!("r must be at least 2, got {r}")));
    }
    let lines: Vec<&RealLine> = lines.iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut through: BTreeMap<(Rational, Rational), BTreeSet<usize>> = BTreeMap::new();
    for (i, l) in lines.iter().enumerate() {
        for (k, m) in lines.iter().enumerate().skip(i + 1) {
            if let Some(p) = l.meet(m) {
                let set = through.entry(p).or_default();
                set.insert(i);
                set.insert(k);
            }
        }
    }
    let points = through.into_iter().filter(|(_, s)| s.len() >= r).map(|(p, s)| (p, s.len())).collect();
    Ok(RichPoints { lines: lines.len(), r, points })
}

/// Count of `r`-rich points as a plain integer.
pub fn rich_point_count(lines: &[RealLine], r: usize) -> Result<usize> {
    Ok(rich_points(lines, r)?.count())
}

//! Explicit line families with many incidences.
//!
//! Dual plane: the lines `(1+mε)x + (1−(m−1)ε)y = 2+ε` all contain every point
//! `(1+aε, 1−aε)`. Double plane: the lines
//! `y = (k+(k−1)j)x + ((15−3k)+(9−3k)j)` all contain every point
//! `(c+(3−c)j, 12+c+(9−c)j)`.

use alloc::vec::Vec;

use super::line::{Line2, Point2};
use crate::numbers::{PlanarNumber, System};

fn d(re: i64, im: i64) -> PlanarNumber {
    PlanarNumber::from_ints(System::Dual, re, im)
}

fn j(re: i64, im: i64) -> PlanarNumber {
    PlanarNumber::from_ints(System::Double, re, im)
}

pub fn dual_family_line(m: i64) -> Line2 {
    Line2::general(d(1, m), d(1, 1 - m), d(2, 1)).expect("b is invertible")
}

pub fn dual_family_point(a: i64) -> Point2 {
    Point2::new(d(1, a), d(1, -a)).expect("same system")
}

pub fn double_family_line(k: i64) -> Line2 {
    Line2::slope(j(k, k - 1), j(15 - 3 * k, 9 - 3 * k)).expect("same system")
}

pub fn double_family_point(c: i64) -> Point2 {
    Point2::new(j(c, 3 - c), j(12 + c, 9 - c)).expect("same system")
}

/// `points` points and `lines` lines from the family of `system`, every point
/// on every line.
pub fn family_configuration(system: System, points: usize, lines: usize) -> (Vec<Point2>, Vec<Line2>) {
    let (point, line): (fn(i64) -> Point2, fn(i64) -> Line2) = match system {
        System::Dual => (dual_family_point, dual_family_line),
        System::Double => (double_family_point, double_family_line),
    };
    let ps = (1..=points as i64).map(point).collect();
    let ls = (1..=lines as i64).map(line).collect();
    (ps, ls)
}

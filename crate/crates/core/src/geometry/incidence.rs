use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::line::{LineForm, Line2, Point2};
use crate::numbers::PlanarNumber;

/// Incidence totals for a point set against a line set. Duplicate inputs are
/// merged first and the number of merged copies is reported.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncidenceReport {
    pub points: usize,
    pub lines: usize,
    pub incidences: u64,
    /// Incidences on degenerate lines, also included in `incidences`.
    pub degenerate_incidences: u64,
    pub degenerate_lines: usize,
    pub duplicate_points: usize,
    pub duplicate_lines: usize,
}

/// Points grouped by `x`, for lookups along a line.
pub struct PointIndex<'a> {
    by_x: BTreeMap<&'a PlanarNumber, BTreeSet<&'a PlanarNumber>>,
    all: Vec<&'a Point2>,
}

impl<'a> PointIndex<'a> {
    pub fn new(points: impl IntoIterator<Item = &'a Point2>) -> Self {
        let mut by_x: BTreeMap<&PlanarNumber, BTreeSet<&PlanarNumber>> = BTreeMap::new();
        let mut all = Vec::new();
        for p in points {
            if by_x.entry(p.x()).or_default().insert(p.y()) {
                all.push(p);
            }
        }
        PointIndex { by_x, all }
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    /// Number of indexed points on `line`.
    pub fn count_on(&self, line: &Line2) -> u64 {
        match line.form() {
            LineForm::Slope { a, b } => {
                if self.by_x.keys().next().is_some_and(|x| x.system() != a.system()) {
                    return 0;
                }
                self.by_x.iter().filter(|(x, ys)| ys.contains(&(&(a * x) + b))).count() as u64
            }
            LineForm::Vertical { b } => self.by_x.get(b).map_or(0, |ys| ys.len() as u64),
            LineForm::General { .. } => self.all.iter().filter(|p| line.contains(p)).count() as u64,
        }
    }

    /// Indexed points on `line`, ordered by `(x, y)`.
    pub fn points_on(&self, line: &Line2) -> Vec<Point2> {
        let mut out = Vec::new();
        match line.form() {
            LineForm::Slope { a, b } => {
                for (x, ys) in &self.by_x {
                    if x.system() != a.system() {
                        break;
                    }
                    let y = &(a * x) + b;
                    if ys.contains(&y) {
                        out.push(Point2::new((*x).clone(), y).expect("same system"));
                    }
                }
            }
            LineForm::Vertical { b } => {
                if let Some(ys) = self.by_x.get(b) {
                    out.extend(ys.iter().map(|y| Point2::new(b.clone(), (*y).clone()).expect("same system")));
                }
            }
            LineForm::General { .. } => {
                let mut hits: Vec<Point2> = self.all.iter().filter(|p| line.contains(p)).map(|p| (*p).clone()).collect();
                hits.sort();
                out = hits;
            }
        }
        out
    }
}

/// `|{(p, ℓ) : p ∈ ℓ}|` after merging duplicate points and lines.
pub fn count_incidences(points: &[Point2], lines: &[Line2]) -> u64 {
    incidence_report(points, lines).incidences
}

pub fn incidence_report(points: &[Point2], lines: &[Line2]) -> IncidenceReport {
    let index = PointIndex::new(points);
    let unique_lines: BTreeSet<&Line2> = lines.iter().collect();
    let mut report = IncidenceReport {
        points: index.len(),
        lines: unique_lines.len(),
        duplicate_points: points.len() - index.len(),
        duplicate_lines: lines.len() - unique_lines.len(),
        ..IncidenceReport::default()
    };
    for line in unique_lines {
        let count = index.count_on(line);
        report.incidences += count;
        if line.is_degenerate() {
            report.degenerate_lines += 1;
            report.degenerate_incidences += count;
        }
    }
    report
}

/// Pair-by-pair count, kept as a reference for the indexed version.
pub fn count_incidences_naive(points: &[Point2], lines: &[Line2]) -> u64 {
    let points: BTreeSet<&Point2> = points.iter().collect();
    let lines: BTreeSet<&Line2> = lines.iter().collect();
    let mut total = 0;
    for l in &lines {
        for p in &points {
            if l.contains(p) {
                total += 1;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::System;

    fn d(re: i64, im: i64) -> PlanarNumber {
        PlanarNumber::from_ints(System::Dual, re, im)
    }

    #[test]
    fn empty_points() {
        assert_eq!(count_incidences(&[], &[Line2::vertical(d(0, 0))]), 0);
    }

    #[test]
    fn duplicates_are_merged() {
        let p = Point2::new(d(1, 0), d(1, 0)).unwrap();
        let l = Line2::slope(d(1, 0), d(0, 0)).unwrap();
        let r = incidence_report(&[p.clone(), p], &[l.clone(), l]);
        assert_eq!(r.incidences, 1);
        assert_eq!(r.duplicate_points, 1);
        assert_eq!(r.duplicate_lines, 1);
    }

    #[test]
    fn vertical_lines_hit_each_point_once() {
        let points: Vec<Point2> = (0..4).flat_map(|x| (0..3).map(move |y| Point2::new(d(x, 1), d(y, 0)).unwrap())).collect();
        let lines: Vec<Line2> = (0..6).map(|x| Line2::vertical(d(x, 1))).collect();
        assert_eq!(count_incidences(&points, &lines), points.len() as u64);
        assert_eq!(count_incidences_naive(&points, &lines), points.len() as u64);
    }

    #[test]
    fn degenerate_lines_reported() {
        let l = Line2::general(d(0, 1), d(0, 0), d(0, 0)).unwrap();
        assert!(l.is_degenerate());
        let p = Point2::new(d(0, 3), d(5, 5)).unwrap();
        let r = incidence_report(&[p], &[l]);
        assert_eq!((r.incidences, r.degenerate_incidences, r.degenerate_lines), (1, 1, 1));
    }
}

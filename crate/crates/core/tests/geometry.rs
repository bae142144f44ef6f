use std::collections::BTreeSet;

use planar_core::geometry::family::{pair_rule, shared_members};
use planar_core::geometry::incidence::count_incidences_naive;
use planar_core::geometry::intersect::r4_oracle;
use planar_core::geometry::partition::partition_multiplicity_one_indices;
use planar_core::geometry::rich::rich_points;
use planar_core::geometry::{
    classify_intersection, count_incidences, detect_families, line_multiplicity, IntersectionKind, Line2, Point2,
    RealLine,
};
use planar_core::rational::{frac, int};
use planar_core::{PlanarNumber, System};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = System> {
    prop_oneof![Just(System::Dual), Just(System::Double)]
}

fn coeff(system: System) -> impl Strategy<Value = PlanarNumber> {
    (-3i64..=3, 1i64..=2, -3i64..=3, 1i64..=2).prop_map(move |(p, q, r, s)| PlanarNumber::new(system, frac(p, q), frac(r, s)))
}

fn slope_line(system: System) -> impl Strategy<Value = Line2> {
    (coeff(system), coeff(system)).prop_map(|(a, b)| Line2::slope(a, b).unwrap())
}

/// A second line that often shares coefficient components with the first.
fn related(l: &Line2) -> impl Strategy<Value = Line2> {
    let (a, b) = l.as_slope().unwrap();
    let s = a.system();
    let parts = [a.re().clone(), a.im().clone(), b.re().clone(), b.im().clone()];
    proptest::collection::vec((0u8..3, -2i64..=2), 4).prop_map(move |choices| {
        let v: Vec<_> = parts
            .iter()
            .zip(&choices)
            .map(|(x, &(mode, d))| match mode {
                0 => x.clone(),
                1 => x + int(d),
                _ => -x.clone() + int(d),
            })
            .collect();
        Line2::slope(PlanarNumber::new(s, v[0].clone(), v[1].clone()), PlanarNumber::new(s, v[2].clone(), v[3].clone()))
            .unwrap()
    })
}

fn any_line(system: System) -> impl Strategy<Value = Line2> {
    prop_oneof![
        3 => slope_line(system),
        1 => coeff(system).prop_map(Line2::vertical),
        2 => (coeff(system), coeff(system), coeff(system)).prop_filter_map("not a line", |(a, b, c)| Line2::general(a, b, c).ok()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn lemma_formulas_match_oracle((l1, l2) in system().prop_flat_map(slope_line).prop_flat_map(|l| (Just(l.clone()), related(&l)))) {
        prop_assert_eq!(classify_intersection(&l1, &l2), r4_oracle(&l1, &l2));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn oracle_handles_every_form((l1, l2) in system().prop_flat_map(|s| (any_line(s), any_line(s)))) {
        let kind = classify_intersection(&l1, &l2);
        prop_assert_eq!(&kind, &r4_oracle(&l1, &l2));
        // a single point must lie on both lines
        if let IntersectionKind::Single { point } = &kind {
            prop_assert!(l1.contains(point) && l2.contains(point));
        }
        if !l1.is_degenerate() && !l2.is_degenerate() {
            prop_assert!(!matches!(kind, IntersectionKind::Flat(_)));
        }
    }

    #[test]
    fn infinite_intersections_lie_on_both((l1, l2) in system().prop_flat_map(slope_line).prop_flat_map(|l| (Just(l.clone()), related(&l)))) {
        if let Some(axis) = classify_intersection(&l1, &l2).as_flat() {
            prop_assert!(l1.flat().unwrap().contains_flat(&axis));
            prop_assert!(l2.flat().unwrap().contains_flat(&axis));
        }
    }

    #[test]
    fn indexed_count_matches_naive(
        (points, lines) in system().prop_flat_map(|s| (
            proptest::collection::vec((coeff(s), coeff(s)).prop_map(|(x, y)| Point2::new(x, y).unwrap()), 0..12),
            proptest::collection::vec(any_line(s), 0..12),
        ))
    ) {
        // add points known to lie on the lines
        let mut points = points;
        for l in &lines {
            if let Some((a, b)) = l.as_slope() {
                let x = PlanarNumber::one(a.system());
                points.push(Point2::new(x.clone(), &(a * &x) + b).unwrap());
            }
        }
        prop_assert_eq!(count_incidences(&points, &lines), count_incidences_naive(&points, &lines));
    }

    #[test]
    fn vertical_lines_meet_each_point_once(
        (points, bs) in system().prop_flat_map(|s| (
            proptest::collection::vec((coeff(s), coeff(s)).prop_map(|(x, y)| Point2::new(x, y).unwrap()), 1..15),
            proptest::collection::vec(coeff(s), 1..15),
        ))
    ) {
        let lines: Vec<Line2> = bs.into_iter().map(Line2::vertical).collect();
        for p in &points {
            let hits = lines.iter().collect::<BTreeSet<_>>().into_iter().filter(|l| l.contains(p)).count();
            prop_assert!(hits <= 1);
        }
    }
}

/// Lines through a few shared axes, so that families overlap.
fn family_rich(system: System) -> impl Strategy<Value = Vec<Line2>> {
    proptest::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2), 4..30).prop_map(move |v| {
        v.into_iter()
            .map(|(a1, a2, b1, b2)| {
                Line2::slope(PlanarNumber::from_ints(system, a1, a2), PlanarNumber::from_ints(system, b1, b2)).unwrap()
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn family_invariants(lines in system().prop_flat_map(family_rich)) {
        let families = detect_families(&lines, 2);
        for f in &families {
            prop_assert!(f.len() >= 2);
            for (pos, &i) in f.members.iter().enumerate() {
                prop_assert!(f.admits(&lines[i]));
                prop_assert!(lines[i].flat().unwrap().contains_flat(&f.axis));
                for &k in &f.members[pos + 1..] {
                    prop_assert_eq!(classify_intersection(&lines[i], &lines[k]).as_flat(), Some(f.axis.clone()));
                }
            }
            for (i, l) in lines.iter().enumerate() {
                if f.members.binary_search(&i).is_err() {
                    prop_assert!(!f.admits(l));
                    prop_assert!(!l.flat().unwrap().contains_flat(&f.axis));
                }
            }
            if let Ok(h) = f.hyperplane() {
                for &i in &f.members {
                    prop_assert!(h.contains_flat(&lines[i].flat().unwrap()));
                }
            }
        }
        // every pair meeting in a line is inside some family
        for i in 0..lines.len() {
            for k in i + 1..lines.len() {
                if let Some(axis) = classify_intersection(&lines[i], &lines[k]).as_flat() {
                    prop_assert!(families.iter().any(|f| f.axis == axis && f.members.contains(&i) && f.members.contains(&k)));
                }
            }
        }
        for (x, f) in families.iter().enumerate() {
            for g in &families[x + 1..] {
                let rule = pair_rule(f, g).unwrap();
                prop_assert!(shared_members(f, g) <= rule.bound(), "{:?}", rule);
            }
        }
    }

    #[test]
    fn partition_parts_meet_in_at_most_a_point(lines in system().prop_flat_map(family_rich)) {
        let parts = partition_multiplicity_one_indices(&lines).unwrap();
        prop_assert_eq!(parts.len(), line_multiplicity(&lines).unwrap());
        let mut seen: Vec<usize> = parts.iter().flatten().copied().collect();
        seen.sort();
        prop_assert_eq!(seen, (0..lines.len()).collect::<Vec<_>>());
        for part in &parts {
            for (pos, &i) in part.iter().enumerate() {
                for &k in &part[pos + 1..] {
                    let kind = r4_oracle(&lines[i], &lines[k]);
                    let ok = matches!(kind, IntersectionKind::Single { .. } | IntersectionKind::Empty);
                    prop_assert!(ok, "{:?}", kind);
                }
            }
        }
    }

    #[test]
    fn rich_points_match_direct_count(
        coeffs in proptest::collection::vec((-3i64..=3, -3i64..=3), 2..14),
        r in 2usize..5,
    ) {
        let lines: Vec<RealLine> = coeffs.iter().map(|&(p, q)| RealLine::slope(int(p), int(q))).collect();
        let rich = rich_points(&lines, r).unwrap();
        let unique: BTreeSet<&RealLine> = lines.iter().collect();
        let mut candidates = BTreeSet::new();
        for a in &unique {
            for b in &unique {
                if let Some(p) = a.meet(b) {
                    candidates.insert(p);
                }
            }
        }
        let expected: BTreeSet<_> = candidates
            .into_iter()
            .filter(|p| unique.iter().filter(|l| l.contains(p)).count() >= r)
            .collect();
        prop_assert_eq!(rich.points.keys().cloned().collect::<BTreeSet<_>>(), expected);
    }
}

#[test]
fn grid_dual_rich_points() {
    let k = 6;
    let lines: Vec<RealLine> = (1..=k).flat_map(|p| (1..=k).map(move |q| RealLine::slope(int(p), int(q)))).collect();
    let rich = rich_points(&lines, 2).unwrap();
    let mut points = BTreeSet::new();
    for a in &lines {
        for b in &lines {
            if let Some(p) = a.meet(b) {
                points.insert(p);
            }
        }
    }
    assert_eq!(rich.count(), points.len());
    assert!(rich.envelope() > int(0));
}

#[test]
fn explicit_family_intersections() {
    use planar_core::geometry::constructions::{double_family_line, dual_family_line};
    let d0 = dual_family_line(0);
    let d1 = dual_family_line(1);
    assert!(matches!(classify_intersection(&d0, &d1), IntersectionKind::InfiniteLine { .. }));
    let j0 = double_family_line(0);
    let j1 = double_family_line(1);
    assert!(matches!(r4_oracle(&j0, &j1), IntersectionKind::InfiniteLine { .. }));
    assert_eq!(classify_intersection(&j0, &j1), r4_oracle(&j0, &j1));
}

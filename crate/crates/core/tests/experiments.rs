use planar_core::experiments::elekes::elekes_lines;
use planar_core::experiments::{build_elekes, classify_incidences, solymosi_pipeline, ClassifyOptions};
use planar_core::geometry::{count_incidences, line_multiplicity, partition_multiplicity_one, r4_oracle, IntersectionKind};
use planar_core::rational::frac;
use planar_core::sets::{dual_grid, energy_report, productset, unit_real_dual, EnergyOptions};
use planar_core::{NumberSet, PlanarNumber, System};
use proptest::prelude::*;

fn invertible_set(system: System, max: usize) -> impl Strategy<Value = NumberSet> {
    proptest::collection::vec((-6i64..=6, -6i64..=6), 2..=max).prop_filter_map("too few invertible", move |v| {
        let set = NumberSet::new(system, v.into_iter().map(|(a, b)| PlanarNumber::from_ints(system, a, b))).ok()?;
        let set = set.filter(PlanarNumber::is_invertible);
        (set.len() >= 2).then_some(set)
    })
}

fn any_set(max: usize) -> impl Strategy<Value = NumberSet> {
    prop_oneof![invertible_set(System::Dual, max), invertible_set(System::Double, max)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn elekes_bounds(a in any_set(7)) {
        let cfg = build_elekes(&a).unwrap();
        let n = a.len() as u64;
        prop_assert_eq!(cfg.distinct_lines, a.len() * a.len());
        prop_assert!(cfg.incidences >= n * n * n);
        prop_assert_eq!(cfg.witnesses, n * n * n);
        prop_assert_eq!(count_incidences(&cfg.points(), &cfg.lines), cfg.incidences);
        let stats = classify_incidences(&cfg, &ClassifyOptions { include_negative: true, ..Default::default() }).unwrap();
        prop_assert_eq!(stats.n_special + stats.n_standard, cfg.incidences);
        prop_assert!(stats.all_hold(), "{:?}", stats.checks);
    }

    #[test]
    fn energy_identities(a in any_set(12)) {
        let e = energy_report(&a, &EnergyOptions::default()).unwrap();
        let n = a.len() as u64;
        prop_assert_eq!(e.r_div_total(), n * n);
        prop_assert_eq!(e.energy_by_quadruples, Some(e.energy));
        prop_assert!(e.energy as u128 * productset(&a).len() as u128 >= (n as u128).pow(4));
        prop_assert!(e.r_div_square_sum() >= e.energy as u128);
    }

    #[test]
    fn solymosi_chain(a in any_set(16)) {
        if let Ok(r) = solymosi_pipeline(&a, &EnergyOptions::default()) {
            prop_assert!(r.all_hold(), "{:?}", r.wedge.checks);
        }
    }
}

#[test]
fn unit_real_elekes_is_special_heavy() {
    let cfg = build_elekes(&unit_real_dual(6)).unwrap();
    let stats = classify_incidences(&cfg, &ClassifyOptions::default()).unwrap();
    assert!(stats.n_special > 0);
    assert!(!stats.qualifying_families.is_empty());
    assert!(stats.all_hold());
    assert_eq!(stats.buckets.values().sum::<u64>(), stats.n_special);
}

#[test]
fn grid_lines_split_into_point_meeting_parts() {
    let a = dual_grid(16, &frac(1, 2)).unwrap();
    let lines = elekes_lines(&a);
    let parts = partition_multiplicity_one(&lines).unwrap();
    assert_eq!(parts.len(), line_multiplicity(&lines).unwrap());
    assert_eq!(parts.len(), 4 * 16);
    for part in &parts {
        for (i, l) in part.iter().enumerate() {
            for m in &part[i + 1..] {
                assert!(matches!(r4_oracle(l, m), IntersectionKind::Single { .. } | IntersectionKind::Empty));
            }
        }
    }
}

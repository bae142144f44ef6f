use planar_core::rational::frac;
use planar_core::{Functional, PlanarNumber, System};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = System> {
    prop_oneof![Just(System::Dual), Just(System::Double)]
}

fn number(system: System) -> impl Strategy<Value = PlanarNumber> {
    (-50i64..50, 1i64..12, -50i64..50, 1i64..12)
        .prop_map(move |(p, q, r, s)| PlanarNumber::new(system, frac(p, q), frac(r, s)))
}

fn small(system: System) -> impl Strategy<Value = PlanarNumber> {
    (-3i64..3, -3i64..3).prop_map(move |(p, r)| PlanarNumber::from_ints(system, p, r))
}

fn pair() -> impl Strategy<Value = (PlanarNumber, PlanarNumber)> {
    system().prop_flat_map(|s| (number(s), number(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100_000))]

    #[test]
    fn matrix_representation_is_a_homomorphism((a, b) in pair()) {
        prop_assert_eq!((&a * &b).to_matrix(), a.to_matrix().mul(&b.to_matrix()));
        prop_assert_eq!((&a + &b).to_matrix(), a.to_matrix().add(&b.to_matrix()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5_000))]

    #[test]
    fn functionals_respect_ring_operations((a, b) in pair()) {
        let fs: &[Functional] = match a.system() {
            System::Dual => &[Functional::Re],
            System::Double => &[Functional::DeltaPlus, Functional::DeltaMinus],
        };
        for &f in fs {
            let fa = a.functional(f).unwrap();
            let fb = b.functional(f).unwrap();
            prop_assert_eq!((&a * &b).functional(f).unwrap(), &fa * &fb);
            prop_assert_eq!((&a + &b).functional(f).unwrap(), &fa + &fb);
            if b.is_invertible() {
                let q = a.try_div(&b).unwrap();
                prop_assert_eq!(q.functional(f).unwrap(), &fa * b.inverse().unwrap().functional(f).unwrap());
            }
        }
    }

    #[test]
    fn inverse_is_exact((a, _) in pair()) {
        if a.is_invertible() {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, PlanarNumber::one(a.system()));
            prop_assert_eq!(inv.inverse().unwrap(), a);
        } else {
            prop_assert!(a.inverse().is_err());
        }
    }

    #[test]
    fn difference_invertibility((a, b) in system().prop_flat_map(|s| (small(s), small(s)))) {
        let d = &a - &b;
        let expected_singular = match a.system() {
            System::Dual => a.re() == b.re(),
            System::Double => {
                a.functional(Functional::DeltaPlus).unwrap() == b.functional(Functional::DeltaPlus).unwrap()
                    || a.functional(Functional::DeltaMinus).unwrap() == b.functional(Functional::DeltaMinus).unwrap()
            }
        };
        prop_assert_eq!(!d.is_invertible(), expected_singular);
    }
}

#[test]
fn mismatched_systems_are_rejected() {
    let d = PlanarNumber::from_ints(System::Dual, 1, 1);
    let j = PlanarNumber::from_ints(System::Double, 1, 1);
    assert!(d.try_mul(&j).is_err());
    assert!(d.try_add(&j).is_err());
    assert!(d.functional(Functional::DeltaPlus).is_err());
    assert!(j.functional(Functional::Re).is_err());
}

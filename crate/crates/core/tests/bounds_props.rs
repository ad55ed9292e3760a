mod common;

use bkk_core::polynomial::real;
use bkk_core::{
    bkk_bound, bound_report, component_bound, kushnirenko_bound, ComponentBranch, Polynomial, PointConfiguration,
    PolynomialSystem,
};
use proptest::prelude::*;

fn nonnegative(dim: usize, max: usize) -> impl Strategy<Value = PointConfiguration> {
    prop::collection::vec(prop::collection::vec(0i64..=5, dim), 1..=max)
        .prop_map(move |pts| PointConfiguration::dedup(dim, pts).unwrap())
}

fn system_on(supports: &[PointConfiguration]) -> PolynomialSystem {
    let n = supports[0].dim();
    PolynomialSystem::with_default_names(
        supports
            .iter()
            .map(|a| Polynomial::new(n, a.points().iter().enumerate().map(|(j, p)| (p.clone(), real(j as i64 + 1)))).unwrap())
            .collect(),
    )
    .unwrap()
}

fn with_simplex(a: &PointConfiguration, i: usize) -> PointConfiguration {
    let n = a.dim();
    let mut pts = vec![vec![0; n]];
    let mut e = vec![0; n];
    e[i] = 1;
    pts.push(e);
    pts.extend(a.points().iter().cloned());
    PointConfiguration::dedup(n, pts).unwrap()
}

proptest! {
    #![proptest_config(common::cases(100))]

    #[test]
    fn unmixed_bkk_is_kushnirenko(a in (1usize..=3).prop_flat_map(|n| nonnegative(n, 6))) {
        let f = system_on(&vec![a.clone(); a.dim()]);
        prop_assert_eq!(bkk_bound(&f).unwrap(), kushnirenko_bound(&a).unwrap());
    }

    #[test]
    fn square_component_bound_is_bkk_of_augmented_supports(supports in (1usize..=2).prop_flat_map(|n| prop::collection::vec(nonnegative(n, 5), n))) {
        let augmented: Vec<PointConfiguration> = supports.iter().enumerate().map(|(i, a)| with_simplex(a, i)).collect();
        let f = system_on(&augmented);
        let (b, branch) = component_bound(&f).unwrap();
        prop_assert_eq!(branch, ComponentBranch::Overdetermined);
        prop_assert_eq!(b, bkk_bound(&f).unwrap());
    }

    #[test]
    fn reports_are_deterministic(supports in prop::collection::vec(nonnegative(2, 5), 1..=3)) {
        let f = system_on(&supports);
        let r = bound_report(&f).unwrap();
        prop_assert_eq!(bound_report(&f).unwrap(), r.clone());
        if f.is_square() {
            prop_assert!(r.bkk.is_some() && r.bezout.is_some());
        } else {
            prop_assert!(r.bkk.is_none());
        }
    }
}

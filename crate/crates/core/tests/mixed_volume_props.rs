mod common;

use bkk_core::geometry::minkowski_vertices;
use bkk_core::{
    mixed_area_fast, mixed_volume, mixed_volume_cells, mixed_volume_ie, normalized_volume, polarization_coefficients,
    PointConfiguration, Strategy as Method,
};
use bkk_core::mixed_volume::polarized_mixed_volume;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn planar_pair() -> impl Strategy<Value = Vec<PointConfiguration>> {
    prop::collection::vec(common::config(2, 1, 12, 50), 2)
}

fn triple() -> impl Strategy<Value = Vec<PointConfiguration>> {
    prop::collection::vec(common::config(3, 1, 5, 5), 3)
}

fn agree(c: &[PointConfiguration], seed: u64) -> Result<BigInt, TestCaseError> {
    let cells = mixed_volume_cells(c, seed).unwrap();
    let ie = mixed_volume_ie(c).unwrap();
    prop_assert_eq!(&cells.value, &ie.value);
    let certified: BigInt = cells.certificate.unwrap().iter().map(|e| e.contribution.clone()).sum();
    prop_assert_eq!(&certified, &ie.value);
    if c.len() == 2 {
        let fast = mixed_area_fast(&c[0], &c[1]).unwrap();
        prop_assert_eq!(&fast.value, &ie.value);
        let strips: BigInt = fast.certificate.unwrap().iter().map(|e| e.contribution.clone()).sum();
        prop_assert_eq!(&strips, &ie.value);
    }
    for s in [Method::Auto, Method::Cells, Method::InclusionExclusion] {
        prop_assert_eq!(&mixed_volume(c, s, seed).unwrap().value, &ie.value);
    }
    Ok(ie.value)
}

proptest! {
    #![proptest_config(common::cases(300))]

    #[test]
    fn planar_methods_agree(c in planar_pair(), seed in 0u64..1000) {
        agree(&c, seed)?;
    }

    #[test]
    fn planar_symmetry_translation_unimodular(c in planar_pair(), u in common::unimodular(2),
                                              shifts in prop::collection::vec(prop::collection::vec(-40i64..=40, 2), 2)) {
        let m = agree(&c, 1)?;
        let swapped = [c[1].clone(), c[0].clone()];
        prop_assert_eq!(agree(&swapped, 2)?, m.clone());
        let moved: Vec<_> = c.iter().zip(&shifts).map(|(a, s)| a.translate(s).unwrap()).collect();
        prop_assert_eq!(agree(&moved, 3)?, m.clone());
        let mapped: Vec<_> = c.iter().map(|a| a.transform(&u).unwrap()).collect();
        prop_assert_eq!(agree(&mapped, 4)?, m);
    }

    #[test]
    fn multilinear_in_the_first_argument(a in common::config(2, 1, 6, 10), a2 in common::config(2, 1, 6, 10),
                                         b in common::config(2, 1, 6, 10)) {
        let sum = minkowski_vertices(&a, &a2).unwrap();
        let lhs = agree(&[sum, b.clone()], 0)?;
        prop_assert_eq!(lhs, agree(&[a, b.clone()], 0)? + agree(&[a2, b], 0)?);
    }

    #[test]
    fn unmixed_is_normalized_volume(a in common::config(2, 1, 12, 30)) {
        prop_assert_eq!(agree(&[a.clone(), a.clone()], 0)?, normalized_volume(&a).unwrap());
    }

    #[test]
    fn planar_polarization(c in planar_pair()) {
        let m = mixed_volume_ie(&c).unwrap().value;
        prop_assert_eq!(polarized_mixed_volume(&c, &polarization_coefficients(2)).unwrap(), BigRational::from_integer(m));
    }
}

proptest! {
    #![proptest_config(common::cases(60))]

    #[test]
    fn spatial_methods_agree(c in triple(), seed in 0u64..1000, u in common::unimodular(3)) {
        let m = agree(&c, seed)?;
        let rotated = [c[1].clone(), c[2].clone(), c[0].clone()];
        prop_assert_eq!(agree(&rotated, seed + 1)?, m.clone());
        let mapped: Vec<_> = c.iter().map(|a| a.transform(&u).unwrap()).collect();
        prop_assert_eq!(agree(&mapped, seed + 2)?, m.clone());
        prop_assert_eq!(polarized_mixed_volume(&c, &polarization_coefficients(3)).unwrap(), BigRational::from_integer(m));
    }

    #[test]
    fn spatial_unmixed(a in common::config(3, 1, 7, 4)) {
        let c = [a.clone(), a.clone(), a.clone()];
        prop_assert_eq!(mixed_volume_ie(&c).unwrap().value, normalized_volume(&a).unwrap());
        prop_assert_eq!(mixed_volume_cells(&c, 5).unwrap().value, normalized_volume(&a).unwrap());
    }
}

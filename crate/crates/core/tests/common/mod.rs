#![allow(dead_code)]

use bkk_core::PointConfiguration;
use proptest::prelude::*;
use rand::Rng;

/// Test configuration without on-disk failure persistence.
pub fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, failure_persistence: None, ..ProptestConfig::default() }
}

/// Between `min` and `max` points in `Z^dim` with coordinates in `[-bound, bound]`.
pub fn config(dim: usize, min: usize, max: usize, bound: i64) -> impl Strategy<Value = PointConfiguration> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, dim), min..=max)
        .prop_map(move |pts| PointConfiguration::dedup(dim, pts).unwrap())
}

/// Like [`config`] but affinely spanning `Z^dim`.
pub fn full_config(dim: usize, max: usize, bound: i64) -> impl Strategy<Value = PointConfiguration> {
    config(dim, dim + 1, max, bound).prop_filter("full-dimensional", move |a| a.affine_dimension() == Some(dim))
}

/// Small square integer matrices as rows.
pub fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(lo..=hi, n), n)
}

/// A random product of elementary integer row operations.
pub fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..6).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in ops {
            if i == j {
                m[i].iter_mut().for_each(|x| *x = -*x);
            } else {
                let src = m[j].clone();
                m[i].iter_mut().zip(&src).for_each(|(x, y)| *x += c * y);
            }
        }
        m
    })
}

pub fn random_shift<R: Rng>(rng: &mut R, n: usize) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-30..=30)).collect()
}

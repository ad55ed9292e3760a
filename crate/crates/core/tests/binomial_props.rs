mod common;

use std::f64::consts::PI;

use bkk_core::{
    determinant, enumerate_roots, toric_ideal_binomials, triangularize, BinomialSystem, Constants, IntegerMatrix,
    RootMode, RootSet,
};
use num_complex::Complex;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn binomial_system() -> impl Strategy<Value = BinomialSystem> {
    (2usize..=3)
        .prop_flat_map(|n| {
            let consts = prop::collection::vec((0.3f64..3.0, -PI..PI), n);
            (common::matrix(n, -4, 4), consts)
        })
        .prop_filter_map("|det E| in 1..=12", |(rows, c)| {
            let e = IntegerMatrix::from_rows(&rows);
            let d = determinant(&e).unwrap().abs();
            if d.is_zero() || d > 12.into() {
                return None;
            }
            let c = c.into_iter().map(|(r, t)| Complex::from_polar(r, t)).collect();
            Some(BinomialSystem::new(e, Constants::Float(c)).unwrap())
        })
}

fn monomial(x: &[Complex<f64>], exps: impl Iterator<Item = i32>) -> Complex<f64> {
    x.iter().zip(exps).map(|(xi, e)| xi.powi(e)).product()
}

fn relative(a: Complex<f64>, b: Complex<f64>) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

proptest! {
    #![proptest_config(common::cases(200))]

    #[test]
    fn roots_solve_both_the_system_and_its_triangular_form(s in binomial_system()) {
        let count = determinant(s.exponents()).unwrap().abs().to_usize().unwrap();
        let roots = match enumerate_roots(&s, RootMode::Numeric { tolerance: 1e-8 }).unwrap() {
            RootSet::Numeric(r) => r,
            RootSet::Symbolic(_) => unreachable!(),
        };
        prop_assert_eq!(roots.len(), count);
        let Constants::Float(c) = s.constants() else { unreachable!() };
        let tri = triangularize(&s).unwrap();
        let e = s.exponents();
        let n = s.dim();
        for x in &roots {
            for i in 0..n {
                let lhs = monomial(x, (0..n).map(|j| e.get(i, j).to_i32().unwrap()));
                prop_assert!(relative(lhs, c[i]) < 1e-8);
                let lhs = monomial(x, (0..n).map(|j| tri.h.get(i, j).to_i32().unwrap()));
                let rhs = tri.transformed_constants[i].log_polar.to_complex().unwrap();
                prop_assert!(relative(lhs, rhs) < 1e-8);
            }
        }
        for (i, x) in roots.iter().enumerate() {
            for y in &roots[i + 1..] {
                let d: f64 = x.iter().zip(y).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
                prop_assert!(d > 1e-6);
            }
        }
    }
}

proptest! {
    #![proptest_config(common::cases(100))]

    #[test]
    fn toric_relations_vanish_on_the_parameterization(
        a in (2usize..=3).prop_flat_map(|d| common::config(d, 2, 7, 5)),
        xs in prop::collection::vec(prop::collection::vec((0.9f64..1.1, -PI..PI), 3), 50),
    ) {
        let t = toric_ideal_binomials(&a).unwrap();
        for x in &xs {
            let x: Vec<Complex<f64>> = x[..a.dim()].iter().map(|&(r, t)| Complex::from_polar(r, t)).collect();
            let p: Vec<Complex<f64>> = a.points().iter().map(|q| monomial(&x, q.iter().map(|&v| v as i32))).collect();
            for rel in &t.relations {
                let side = |v: &[num_bigint::BigInt]| monomial(&p, v.iter().map(|e| e.to_i32().unwrap()));
                let (l, r) = (side(&rel.plus), side(&rel.minus));
                prop_assert!((l - r).norm() <= 1e-9 * l.norm().max(r.norm()).max(1.0));
            }
        }
    }
}

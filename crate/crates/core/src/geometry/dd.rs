//! Facet enumeration for full-dimensional point sets by the double
//! description method.
//!
//! A facet `w . y >= c` of `conv(P)` is an extreme ray `(-c, w)` of the cone
//! `{ y : (1, p) . y >= 0 for all p in P }`. Constraints are added one point
//! at a time and adjacency of rays is decided combinatorially from their
//! zero sets, so no rational arithmetic is needed.

use num_bigint::BigInt;

use crate::arith::{self, exact, Ring};

#[derive(Debug, Clone)]
pub(crate) struct RawFacet {
    /// Primitive inner normal.
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
    /// Indices of the points on the facet, increasing.
    pub incident: Vec<usize>,
}

/// Facets of `conv(points)`. The points must affinely span their space.
pub(crate) fn facets(points: &[Vec<i64>]) -> Vec<RawFacet> {
    let mut out = exact!(facets_in(points));
    out.sort_by(|a, b| a.normal.cmp(&b.normal));
    out
}

struct Ray<T> {
    v: Vec<T>,
    zero: Vec<u64>,
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn get_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn facets_in<T: Ring>(points: &[Vec<i64>]) -> Option<Vec<RawFacet>> {
    let m = points.len();
    let dim = points[0].len() + 1;
    let words = m.div_ceil(64);
    let rows: Vec<Vec<T>> = points
        .iter()
        .map(|p| {
            let mut r = Vec::with_capacity(dim);
            r.push(T::from_i64(1));
            r.extend(arith::lift_vec::<T>(p));
            r
        })
        .collect();

    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    for i in 0..m {
        if basis.len() == dim {
            break;
        }
        let trial: Vec<Vec<T>> =
            basis.iter().chain(std::iter::once(&i)).map(|&b| rows[b].clone()).collect();
        if arith::rank(trial)? == basis.len() + 1 {
            basis.push(i);
        }
    }
    assert_eq!(basis.len(), dim, "point set is not full-dimensional");

    let mut rays: Vec<Ray<T>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let others: Vec<Vec<T>> =
            (0..dim).filter(|&k| k != j).map(|k| rows[basis[k]].clone()).collect();
        let mut v = arith::cross(&others)?;
        if arith::dot(&rows[basis[j]], &v)?.is_negative() {
            v = v.iter().map(Ring::neg).collect::<Option<_>>()?;
        }
        arith::primitive_in_place(&mut v);
        let mut zero = vec![0u64; words];
        for k in (0..dim).filter(|&k| k != j) {
            set_bit(&mut zero, basis[k]);
        }
        rays.push(Ray { v, zero });
    }

    let mut in_basis = vec![false; m];
    for &b in &basis {
        in_basis[b] = true;
    }
    for i in (0..m).filter(|&i| !in_basis[i]) {
        let s: Vec<T> = rays.iter().map(|r| arith::dot(&rows[i], &r.v)).collect::<Option<_>>()?;
        let minus: Vec<usize> = (0..rays.len()).filter(|&k| s[k].is_negative()).collect();
        if minus.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if s[k].is_zero() {
                    set_bit(&mut r.zero, i);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..rays.len()).filter(|&k| s[k].is_positive()).collect();
        let mut created: Vec<Ray<T>> = Vec::new();
        let mut common = vec![0u64; words];
        for &p in &plus {
            for &q in &minus {
                let mut count = 0;
                for w in 0..words {
                    common[w] = rays[p].zero[w] & rays[q].zero[w];
                    count += common[w].count_ones() as usize;
                }
                if count + 2 < dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(k, r)| {
                    k != p && k != q && common.iter().zip(&r.zero).all(|(c, z)| c & !z == 0)
                });
                if blocked {
                    continue;
                }
                let mut v = Vec::with_capacity(dim);
                for (a, b) in rays[q].v.iter().zip(&rays[p].v) {
                    v.push(s[p].mul(a)?.sub(&s[q].mul(b)?)?);
                }
                arith::primitive_in_place(&mut v);
                let mut zero = common.clone();
                set_bit(&mut zero, i);
                created.push(Ray { v, zero });
            }
        }
        let mut next: Vec<Ray<T>> = Vec::with_capacity(plus.len() + created.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if s[k].is_zero() {
                set_bit(&mut r.zero, i);
                next.push(r);
            } else if s[k].is_positive() {
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    let mut out = Vec::with_capacity(rays.len());
    for r in rays {
        let mut normal = arith::to_bigints(&r.v[1..]);
        arith::bigint_primitive(&mut normal);
        let incident: Vec<usize> = (0..m).filter(|&k| get_bit(&r.zero, k)).collect();
        let p = &points[incident[0]];
        let offset = normal.iter().zip(p).map(|(a, &b)| a * b).sum();
        out.push(RawFacet { normal, offset, incident });
    }
    Some(out)
}

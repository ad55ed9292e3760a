//! Exact integer kernels shared by the geometry code.
//!
//! The hot loops run over `i128` with checked arithmetic. Every routine here
//! returns `None` on overflow, and callers rerun the same generic code over
//! `BigInt`, which never overflows. Results are therefore always exact.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) trait Ring: Clone + Ord + Debug {
    fn from_i64(v: i64) -> Self;
    fn zero() -> Self;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, o: &Self) -> Self;
    fn gcd(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }
    fn to_bigint(&self) -> BigInt;
}

impl Ring for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn zero() -> Self {
        0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn gcd(&self, o: &Self) -> Self {
        // unsigned_abs avoids the i128::MIN corner.
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn zero() -> Self {
        Zero::zero()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

pub(crate) fn lift_vec<T: Ring>(v: &[i64]) -> Vec<T> {
    v.iter().map(|&x| T::from_i64(x)).collect()
}

pub(crate) fn dot<T: Ring>(a: &[T], b: &[T]) -> Option<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.add(&x.mul(y)?)?;
    }
    Some(acc)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn det<T: Ring>(mut m: Vec<Vec<T>>) -> Option<T> {
    let n = m.len();
    if n == 0 {
        return Some(T::from_i64(1));
    }
    let mut negate = false;
    let mut prev = T::from_i64(1);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Some(T::zero());
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].mul(&m[k][k])?;
                let b = m[i][k].mul(&m[k][j])?;
                m[i][j] = a.sub(&b)?.div_exact(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        Some(d)
    }
}

/// Rank of a list of row vectors, by fraction-free elimination.
pub(crate) fn rank<T: Ring>(mut rows: Vec<Vec<T>>) -> Option<usize> {
    let Some(cols) = rows.first().map(Vec::len) else {
        return Some(0);
    };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let (f, g) = (rows[r][c].clone(), rows[i][c].clone());
            for j in c..cols {
                let a = rows[i][j].mul(&f)?;
                let b = rows[r][j].mul(&g)?;
                rows[i][j] = a.sub(&b)?;
            }
            primitive_in_place(&mut rows[i]);
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Some(r)
}

/// Vector orthogonal to `m` given vectors of length `m + 1`: component `j` is
/// the signed maximal minor with column `j` removed, so that `y . x` equals the
/// determinant of `x` stacked on top of the inputs.
pub(crate) fn cross<T: Ring>(vectors: &[Vec<T>]) -> Option<Vec<T>> {
    let m = vectors.len();
    let mut y = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let minor: Vec<Vec<T>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det(minor)?;
        y.push(if j % 2 == 1 { d.neg()? } else { d });
    }
    Some(y)
}

pub(crate) fn primitive_in_place<T: Ring>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g == T::from_i64(1) {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

pub(crate) fn to_bigints<T: Ring>(v: &[T]) -> Vec<BigInt> {
    v.iter().map(Ring::to_bigint).collect()
}

pub(crate) fn bigint_primitive(v: &mut [BigInt]) {
    primitive_in_place(v);
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Runs an exact kernel over `i128` and falls back to `BigInt` on overflow.
macro_rules! exact {
    ($f:ident ( $($arg:expr),* $(,)? )) => {
        match $f::<i128>($($arg),*) {
            Some(v) => v,
            None => $f::<num_bigint::BigInt>($($arg),*)
                .expect("BigInt arithmetic cannot overflow"),
        }
    };
}
pub(crate) use exact;

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<i128>> {
        rows.iter().map(|r| lift_vec(r)).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let a = m(&[&[1, 7, 7, 4], &[6, 4, 9, 6], &[2, 3, 2, 6], &[6, 4, 8, 5]]);
        assert_eq!(det(a).unwrap().abs(), 215);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(det(b), Some(-1));
        let c = m(&[&[2, 7, 5], &[4, 14, 10], &[8, 10, 14]]);
        assert_eq!(det(c), Some(0));
    }

    #[test]
    fn cross_is_orthogonal() {
        let v = m(&[&[1, 2, 3, 4], &[0, 1, -1, 2], &[5, 0, 0, 1]]);
        let y = cross(&v).unwrap();
        for row in &v {
            assert_eq!(dot(&y, row), Some(0));
        }
        assert!(y.iter().any(|x| *x != 0));
    }

    #[test]
    fn rank_detects_dependence() {
        assert_eq!(rank(m(&[&[1, 1, 1], &[2, 2, 2], &[0, 1, 0]])), Some(2));
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), Some(0));
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX;
        let a = m(&[&[big, big, 1], &[1, big, big], &[big, 1, big]]);
        assert_eq!(det(a.clone()), None);
        let b: Vec<Vec<BigInt>> = vec![
            lift_vec(&[big, big, 1]),
            lift_vec(&[1, big, big]),
            lift_vec(&[big, 1, big]),
        ];
        assert!(det(b).is_some());
    }
}

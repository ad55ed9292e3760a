//! Exact integer linear algebra: determinants and Hermite factorizations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers.
    ///
    /// Panics if the rows are ragged; use [`IntegerMatrix::try_from_rows`]
    /// for untrusted input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::try_from_rows(rows).expect("ragged rows")
    }

    pub fn try_from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * &self.entries[source * self.cols + j];
            self.entries[target * self.cols + j] -= delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.entries[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    fn select_rows(&self, range: std::ops::Range<usize>) -> IntegerMatrix {
        IntegerMatrix {
            rows: range.len(),
            cols: self.cols,
            entries: self.entries[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    fn reverse_columns(&self) -> IntegerMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.entries[i * self.cols..(i + 1) * self.cols].reverse();
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Exact determinant of a square matrix.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let rows = m.to_rows();
    Ok(arith::det(rows).expect("BigInt arithmetic cannot overflow"))
}

/// `true` iff the matrix is square with determinant ±1.
pub fn is_unimodular(m: &IntegerMatrix) -> bool {
    match determinant(m) {
        Ok(d) => d.abs().is_one(),
        Err(_) => false,
    }
}

/// `U * M = H` with `U` unimodular and `H` in Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteFactorization {
    pub u: IntegerMatrix,
    pub h: IntegerMatrix,
    pub rank: usize,
    /// Column of the leading entry of each nonzero row of `h`.
    pub pivot_columns: Vec<usize>,
    /// Product of the pivots. Equals `|det M|` for square nonsingular `M`.
    pub pivot_product: BigInt,
}

impl HermiteFactorization {
    /// Rows of `U` that annihilate `M`; a basis of its integer left kernel.
    pub fn left_kernel(&self) -> impl Iterator<Item = &[BigInt]> {
        (self.rank..self.u.rows()).map(move |i| self.u.row(i))
    }
}

/// Computes the Hermite factorization of any integer matrix.
///
/// Columns are cleared by Euclidean row reduction: the row with the smallest
/// nonzero entry in the working column becomes the pivot and the others are
/// reduced by the nearest-integer quotient until only the pivot survives.
/// Pivots are made positive and entries above each pivot reduced into
/// `[0, pivot)`.
///
/// The trailing rows of `U` (the left kernel) are not determined by the
/// normal form alone, so they are brought into a canonical basis as well:
/// the Hermite normal form taken with columns in reverse order, listed
/// bottom-up. This makes the whole factorization a function of the input.
pub fn hermite_factorization(m: &IntegerMatrix) -> HermiteFactorization {
    let mut f = echelon(m);
    if f.rank < m.rows() && f.rank > 0 {
        let kernel = f.u.select_rows(f.rank..m.rows());
        let canonical = echelon(&kernel.reverse_columns()).h.reverse_columns();
        let s = canonical.rows();
        for (offset, i) in (0..s).rev().enumerate() {
            let dst = f.rank + offset;
            for j in 0..m.rows() {
                f.u.entries[dst * m.rows() + j] = canonical.get(i, j).clone();
            }
        }
    }
    f
}

fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    // floor(a / b + 1/2); b != 0
    let two = BigInt::from(2);
    let (two_a, b) = if b.is_negative() { (-(a * &two), -b) } else { (a * &two, b.clone()) };
    (two_a + &b).div_floor(&(b * two))
}

fn echelon(m: &IntegerMatrix) -> HermiteFactorization {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut r = 0;
    let mut pivot_columns = Vec::new();

    for j in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let pivot = (r..rows)
                .filter(|&i| !h.get(i, j).is_zero())
                .min_by(|&a, &b| h.get(a, j).abs().cmp(&h.get(b, j).abs()).then(a.cmp(&b)));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut cleared = true;
            for i in r + 1..rows {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let q = nearest_quotient(h.get(i, j), h.get(r, j));
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                cleared &= h.get(i, j).is_zero();
            }
            if cleared {
                break;
            }
        }
        if h.get(r, j).is_zero() {
            continue;
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, j).div_floor(h.get(r, j));
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        pivot_columns.push(j);
        r += 1;
    }

    let pivot_product = pivot_columns
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &j)| acc * h.get(i, j));
    HermiteFactorization { u, h, rank: r, pivot_columns, pivot_product }
}

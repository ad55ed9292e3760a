//! Binomial systems `x^{a_i} = c_i` over the torus, and binomial generators
//! of toric ideals.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_linear::{determinant, hermite_factorization, IntegerMatrix};
use crate::geometry::PointConfiguration;
use crate::polynomial::{coefficient_to_f64, Coefficient};

/// Exact transformed constants are only expanded when the exponents of a row
/// of `U` have total absolute value at most this.
pub const EXACT_POWER_LIMIT: u64 = 256;

/// Numeric enumeration refuses systems with more roots than this.
pub const MAX_NUMERIC_ROOTS: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq)]
pub enum Constants {
    Exact(Vec<Coefficient>),
    Float(Vec<Complex<f64>>),
}

impl Constants {
    pub fn len(&self) -> usize {
        match self {
            Constants::Exact(v) => v.len(),
            Constants::Float(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn log_polar(&self, i: usize) -> Result<LogPolar> {
        let c = match self {
            Constants::Exact(v) => coefficient_to_f64(&v[i]),
            Constants::Float(v) => v[i],
        };
        let lp = LogPolar { log_modulus: c.norm().ln(), argument: c.arg() };
        if lp.log_modulus.is_finite() && lp.argument.is_finite() {
            Ok(lp)
        } else {
            Err(Error::Range(format!("constant c{} is not representable in floating point", i + 1)))
        }
    }
}

/// `x^{a_i} = c_i` for `i = 1..n`, with the `a_i` the rows of an `n x n`
/// exponent matrix and every `c_i` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialSystem {
    exponents: IntegerMatrix,
    constants: Constants,
}

impl BinomialSystem {
    pub fn new(exponents: IntegerMatrix, constants: Constants) -> Result<Self> {
        if !exponents.is_square() {
            return Err(Error::Dimension(format!(
                "exponent matrix is {}x{}, expected square",
                exponents.rows(),
                exponents.cols()
            )));
        }
        if constants.len() != exponents.rows() {
            return Err(Error::Dimension(format!(
                "{} constants for {} equations",
                constants.len(),
                exponents.rows()
            )));
        }
        let bad = match &constants {
            Constants::Exact(v) => v.iter().position(Zero::is_zero),
            Constants::Float(v) => {
                v.iter().position(|c| *c == Complex::new(0.0, 0.0) || !c.re.is_finite() || !c.im.is_finite())
            }
        };
        if let Some(i) = bad {
            return Err(Error::InvalidInput(format!(
                "constant c{} must be a nonzero finite number",
                i + 1
            )));
        }
        Ok(Self { exponents, constants })
    }

    pub fn exponents(&self) -> &IntegerMatrix {
        &self.exponents
    }

    pub fn constants(&self) -> &Constants {
        &self.constants
    }

    pub fn dim(&self) -> usize {
        self.exponents.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootCount {
    Finite(BigInt),
    /// `det E = 0`: no roots or infinitely many, depending on the constants.
    NonFinite,
}

/// Number of roots in the torus of any binomial system with exponent
/// matrix `e` and generic nonzero constants.
pub fn count_torus_roots(e: &IntegerMatrix) -> Result<RootCount> {
    let d = determinant(e)?;
    Ok(if d.is_zero() { RootCount::NonFinite } else { RootCount::Finite(d.abs()) })
}

/// A complex number as `exp(log_modulus + i argument)`, `argument ∈ (-π, π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPolar {
    pub log_modulus: f64,
    pub argument: f64,
}

impl LogPolar {
    pub fn to_complex(self) -> Result<Complex<f64>> {
        if self.log_modulus > 700.0 || self.log_modulus < -700.0 {
            return Err(Error::Range(format!(
                "modulus exp({:.3}) is outside the double-precision range",
                self.log_modulus
            )));
        }
        Ok(Complex::from_polar(self.log_modulus.exp(), self.argument))
    }
}

fn reduce_angle(theta: f64) -> f64 {
    let r = theta - 2.0 * PI * (theta / (2.0 * PI)).round();
    if r <= -PI {
        r + 2.0 * PI
    } else {
        r
    }
}

/// The constant `Π_j c_j^{u_j}` for one row `u` of `U`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedConstant {
    pub exponents: Vec<BigInt>,
    /// Exact value, available for exact constants with small exponents.
    pub exact: Option<Coefficient>,
    pub log_polar: LogPolar,
}

impl fmt::Display for TransformedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(j, e)| if e.is_one() { format!("c{}", j + 1) } else { format!("c{}^{}", j + 1, e) })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join(" "))
        }
    }
}

/// The triangular system `H log x = U log c` equivalent to a binomial system.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularBinomialSystem {
    pub u: IntegerMatrix,
    pub h: IntegerMatrix,
    pub transformed_constants: Vec<TransformedConstant>,
}

impl TriangularBinomialSystem {
    /// Diagonal of `H`; its product is the number of roots when nonzero.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.h.rows()).map(|i| self.h.get(i, i).clone()).collect()
    }

    /// Human-readable equations `Π_j x_j^{h_ij} = Π_j c_j^{u_ij}`.
    pub fn equations(&self) -> Vec<String> {
        (0..self.h.rows())
            .map(|i| {
                let lhs: Vec<String> = (0..self.h.cols())
                    .filter(|&j| !self.h.get(i, j).is_zero())
                    .map(|j| {
                        let e = self.h.get(i, j);
                        if e.is_one() { format!("x{}", j + 1) } else { format!("x{}^{}", j + 1, e) }
                    })
                    .collect();
                let lhs = if lhs.is_empty() { "1".to_string() } else { lhs.join(" ") };
                format!("{lhs} = {}", self.transformed_constants[i])
            })
            .collect()
    }
}

/// Triangularizes `S` through the Hermite factorization `U E = H`.
pub fn triangularize(s: &BinomialSystem) -> Result<TriangularBinomialSystem> {
    let f = hermite_factorization(&s.exponents);
    let n = s.dim();
    let logs: Vec<LogPolar> = (0..n).map(|j| s.constants.log_polar(j)).collect::<Result<_>>()?;
    let mut transformed = Vec::with_capacity(n);
    for i in 0..n {
        let row = f.u.row(i).to_vec();
        let mut log_modulus = 0.0;
        let mut argument = 0.0;
        for (e, lp) in row.iter().zip(&logs) {
            let e = e.to_f64().unwrap_or(f64::INFINITY);
            log_modulus += e * lp.log_modulus;
            argument = reduce_angle(argument + reduce_angle(e * lp.argument));
        }
        if !log_modulus.is_finite() {
            return Err(Error::Range("transformed constant overflows".into()));
        }
        let exact = match &s.constants {
            Constants::Exact(c) => exact_power_product(c, &row),
            Constants::Float(_) => None,
        };
        transformed.push(TransformedConstant {
            exponents: row,
            exact,
            log_polar: LogPolar { log_modulus, argument },
        });
    }
    Ok(TriangularBinomialSystem { u: f.u, h: f.h, transformed_constants: transformed })
}

fn exact_power_product(c: &[Coefficient], exps: &[BigInt]) -> Option<Coefficient> {
    let total: u64 = exps.iter().map(|e| e.abs().to_u64().unwrap_or(u64::MAX)).fold(0, u64::saturating_add);
    if total > EXACT_POWER_LIMIT {
        return None;
    }
    let one = Complex::new(BigRational::one(), BigRational::zero());
    let mut acc = one.clone();
    for (ci, e) in c.iter().zip(exps) {
        let k = e.to_i64().expect("bounded by the limit");
        let base = if k < 0 { &one / ci } else { ci.clone() };
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
    }
    Some(acc)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootMode {
    /// Return the triangular system without evaluating any radicals.
    ExactSymbolic,
    /// Evaluate every root in double precision and check its residual.
    Numeric { tolerance: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum RootSet {
    /// Roots are `x = exp(z)` where `H z = U log c` modulo `2πi`; the
    /// diagonal of `H` gives the number of branches in each variable.
    Symbolic(TriangularBinomialSystem),
    Numeric(Vec<Vec<Complex<f64>>>),
}

/// Enumerates the torus roots of a binomial system with `det E ≠ 0`.
///
/// Back-substitution runs in logarithmic coordinates: the last equation of
/// `H z = U log c` gives `h_nn` values of `z_n`, each extended upward one
/// row at a time. The root of `w^d = c` is taken on the principal branch
/// times the `d`-th roots of unity. Residuals are measured relative to
/// `max(1, |c_i|)`.
pub fn enumerate_roots(s: &BinomialSystem, mode: RootMode) -> Result<RootSet> {
    let count = match count_torus_roots(&s.exponents)? {
        RootCount::NonFinite => return Err(Error::NonFinite),
        RootCount::Finite(c) => c,
    };
    let tri = triangularize(s)?;
    let tolerance = match mode {
        RootMode::ExactSymbolic => return Ok(RootSet::Symbolic(tri)),
        RootMode::Numeric { tolerance } => tolerance,
    };
    if count > BigInt::from(MAX_NUMERIC_ROOTS) {
        return Err(Error::SizeGuard {
            size: count.to_usize().unwrap_or(usize::MAX),
            max: MAX_NUMERIC_ROOTS as usize,
        });
    }
    let n = s.dim();
    let h: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| tri.h.get(i, j).to_f64().expect("bounded entries")).collect())
        .collect();
    let diag: Vec<u64> = (0..n).map(|i| tri.h.get(i, i).to_u64().expect("positive pivot")).collect();

    // Partial solutions (z_i, ..., z_{n-1}) grown from the bottom row up.
    let mut partial: Vec<Vec<Complex<f64>>> = vec![Vec::new()];
    for i in (0..n).rev() {
        let lp = tri.transformed_constants[i].log_polar;
        let mut next = Vec::with_capacity(partial.len() * diag[i] as usize);
        for tail in &partial {
            let mut rhs = Complex::new(lp.log_modulus, lp.argument);
            for (offset, z) in tail.iter().enumerate() {
                rhs -= z * h[i][i + 1 + offset];
            }
            let d = diag[i] as f64;
            let base_arg = reduce_angle(rhs.im);
            for k in 0..diag[i] {
                let mut z = vec![Complex::new(rhs.re / d, (base_arg + 2.0 * PI * k as f64) / d)];
                z.extend_from_slice(tail);
                next.push(z);
            }
        }
        partial = next;
    }

    let e: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| s.exponents.get(i, j).to_f64().unwrap_or(f64::INFINITY)).collect())
        .collect();
    let c: Vec<Complex<f64>> = match &s.constants {
        Constants::Exact(v) => v.iter().map(coefficient_to_f64).collect(),
        Constants::Float(v) => v.clone(),
    };
    let mut roots = Vec::with_capacity(partial.len());
    for z in partial {
        let x: Vec<Complex<f64>> = z
            .iter()
            .map(|zj| LogPolar { log_modulus: zj.re, argument: zj.im }.to_complex())
            .collect::<Result<_>>()?;
        for i in 0..n {
            let log_mono: Complex<f64> = z.iter().zip(&e[i]).map(|(zj, a)| zj * a).sum();
            let mono = LogPolar { log_modulus: log_mono.re, argument: reduce_angle(log_mono.im) }.to_complex()?;
            let residual = (mono - c[i]).norm() / c[i].norm().max(1.0);
            if residual.is_nan() || residual >= tolerance {
                return Err(Error::Residual { residual, tolerance });
            }
        }
        roots.push(x);
    }
    Ok(RootSet::Numeric(roots))
}

/// A binomial `p^plus = p^minus` with disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialRelation {
    pub plus: Vec<BigInt>,
    pub minus: Vec<BigInt>,
}

impl BinomialRelation {
    fn from_difference(u: &[BigInt]) -> Self {
        let plus = u.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() }).collect();
        let minus = u.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() }).collect();
        Self { plus, minus }
    }

    /// `plus - minus`.
    pub fn difference(&self) -> Vec<BigInt> {
        self.plus.iter().zip(&self.minus).map(|(a, b)| a - b).collect()
    }
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |v: &[BigInt]| {
            let factors: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, e)| !e.is_zero())
                .map(|(j, e)| if e.is_one() { format!("p{}", j + 1) } else { format!("p{}^{}", j + 1, e) })
                .collect();
            if factors.is_empty() { "1".to_string() } else { factors.join(" ") }
        };
        write!(f, "{} = {}", side(&self.plus), side(&self.minus))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricIdeal {
    pub relations: Vec<BinomialRelation>,
    /// Degree of the monomial map `x -> (x^{a_1}, ..., x^{a_N})`.
    pub h: BigInt,
}

/// Binomial relations among the monomials `p_j = x^{a_j}`, read off from the
/// left kernel of the matrix with rows `(a_j, 1)`.
pub fn toric_ideal_binomials(a: &PointConfiguration) -> Result<ToricIdeal> {
    if a.is_empty() {
        return Err(Error::InvalidInput("toric ideal of an empty configuration".into()));
    }
    let rows: Vec<Vec<BigInt>> = a
        .points()
        .iter()
        .map(|p| p.iter().map(|&x| BigInt::from(x)).chain(std::iter::once(BigInt::one())).collect())
        .collect();
    let homogenized = IntegerMatrix::try_from_rows(rows)?;
    let f = hermite_factorization(&homogenized);
    let relations = f.left_kernel().map(BinomialRelation::from_difference).collect();
    let e = IntegerMatrix::try_from_rows(
        a.points().iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect(),
    )?;
    let h = if a.dim() == 0 { BigInt::one() } else { hermite_factorization(&e).pivot_product };
    Ok(ToricIdeal { relations, h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::real;

    fn float_system(rows: &[&[i64]], c: &[(f64, f64)]) -> BinomialSystem {
        let e = IntegerMatrix::from_rows(rows);
        BinomialSystem::new(e, Constants::Float(c.iter().map(|&(re, im)| Complex::new(re, im)).collect())).unwrap()
    }

    fn numeric(s: &BinomialSystem) -> Vec<Vec<Complex<f64>>> {
        match enumerate_roots(s, RootMode::Numeric { tolerance: 1e-10 }).unwrap() {
            RootSet::Numeric(r) => r,
            RootSet::Symbolic(_) => unreachable!(),
        }
    }

    const PAPER_E: [[i64; 4]; 4] = [[1, 7, 7, 4], [6, 4, 9, 6], [2, 3, 2, 6], [6, 4, 8, 5]];

    #[test]
    fn counts() {
        assert_eq!(count_torus_roots(&IntegerMatrix::from_rows(&PAPER_E)).unwrap(), RootCount::Finite(215.into()));
        assert_eq!(count_torus_roots(&IntegerMatrix::identity(3)).unwrap(), RootCount::Finite(1.into()));
        let singular = IntegerMatrix::from_rows(&[[2, 7, 5], [4, 14, 10], [8, 10, 14]]);
        assert_eq!(count_torus_roots(&singular).unwrap(), RootCount::NonFinite);
        assert!(count_torus_roots(&IntegerMatrix::from_rows(&[[1, 2]])).is_err());
    }

    #[test]
    fn paper_triangular_system() {
        let c: Vec<Coefficient> = (2..6).map(real).collect();
        let s = BinomialSystem::new(IntegerMatrix::from_rows(&PAPER_E), Constants::Exact(c)).unwrap();
        let t = triangularize(&s).unwrap();
        assert_eq!(t.transformed_constants[3].to_string(), "c1^-10 c2^82 c3^38 c4^-93");
        assert_eq!(t.equations()[3], "x4^215 = c1^-10 c2^82 c3^38 c4^-93");
        assert_eq!(t.diagonal(), vec![1.into(), 1.into(), 1.into(), BigInt::from(215)]);
        // the row x3 x4 = c2 c4^-1 has small exponents, so it is evaluated exactly
        assert_eq!(t.transformed_constants[2].to_string(), "c2 c4^-1");
        assert_eq!(
            t.transformed_constants[2].exact,
            Some(Complex::new(BigRational::new(3.into(), 5.into()), BigRational::zero()))
        );
    }

    #[test]
    fn trivial_triangularizations() {
        let s = BinomialSystem::new(IntegerMatrix::identity(3), Constants::Exact(vec![real(2), real(-3), real(7)])).unwrap();
        let t = triangularize(&s).unwrap();
        assert_eq!(t.h, IntegerMatrix::identity(3));
        let values: Vec<Coefficient> = t.transformed_constants.iter().map(|c| c.exact.clone().unwrap()).collect();
        assert_eq!(values, vec![real(2), real(-3), real(7)]);

        let s = BinomialSystem::new(IntegerMatrix::from_rows(&[[2, 0], [0, 3]]), Constants::Exact(vec![real(4), real(8)])).unwrap();
        let t = triangularize(&s).unwrap();
        assert_eq!(t.h, IntegerMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(t.transformed_constants[0].exact, Some(real(4)));
        assert_eq!(t.transformed_constants[1].exact, Some(real(8)));
    }

    #[test]
    fn square_roots_of_one() {
        let roots = numeric(&float_system(&[&[2]], &[(1.0, 0.0)]));
        assert_eq!(roots.len(), 2);
        assert!((roots[0][0] - Complex::new(1.0, 0.0)).norm() < 1e-12);
        assert!((roots[1][0] - Complex::new(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn cube_roots_in_second_variable() {
        let roots = numeric(&float_system(&[&[1, 0], &[0, 3]], &[(5.0, 0.0), (8.0, 0.0)]));
        let omega = Complex::from_polar(1.0, 2.0 * PI / 3.0);
        let expected = [Complex::new(2.0, 0.0), omega * 2.0, omega * omega * 2.0];
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(expected) {
            assert!((r[0] - Complex::new(5.0, 0.0)).norm() < 1e-12);
            assert!((r[1] - e).norm() < 1e-12);
        }
    }

    #[test]
    fn upper_triangular_example_by_substitution() {
        let s = float_system(&[&[2, 1], &[0, 2]], &[(1.0, 0.0), (1.0, 0.0)]);
        let roots = numeric(&s);
        assert_eq!(roots.len(), 4);
        for r in &roots {
            let f1 = r[0] * r[0] * r[1] - 1.0;
            let f2 = r[1] * r[1] - 1.0;
            assert!(f1.norm() < 1e-10 && f2.norm() < 1e-10);
        }
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                let d: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm()).sum();
                assert!(d > 1e-6);
            }
        }
    }

    #[test]
    fn paper_system_has_215_roots() {
        let c = [(0.3, -1.2), (2.0, 0.5), (-0.7, 0.1), (1.5, 1.5)];
        let roots = numeric(&float_system(
            &PAPER_E.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
            &c,
        ));
        assert_eq!(roots.len(), 215);
    }

    #[test]
    fn singular_and_invalid_systems() {
        let s = float_system(&[&[2, 7, 5], &[4, 14, 10], &[8, 10, 14]], &[(1.0, 0.0); 3]);
        assert_eq!(enumerate_roots(&s, RootMode::ExactSymbolic), Err(Error::NonFinite));
        let zero = BinomialSystem::new(IntegerMatrix::identity(1), Constants::Exact(vec![real(0)]));
        assert!(matches!(zero, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn symbolic_mode_returns_the_triangular_system() {
        let s = float_system(&[&[1, 0], &[0, 3]], &[(5.0, 0.0), (8.0, 0.0)]);
        match enumerate_roots(&s, RootMode::ExactSymbolic).unwrap() {
            RootSet::Symbolic(t) => assert_eq!(t.diagonal(), vec![BigInt::from(1), BigInt::from(3)]),
            RootSet::Numeric(_) => panic!("expected symbolic roots"),
        }
    }

    #[test]
    fn huge_exponents_report_range() {
        let s = float_system(&[&[1, 0], &[0, 1]], &[(1e300, 0.0), (1.0, 0.0)]);
        let ok = enumerate_roots(&s, RootMode::Numeric { tolerance: 1e-8 });
        assert!(ok.is_ok());
        let e = IntegerMatrix::from_rows(&[[1, 0], [0, 1]]);
        let c = Constants::Exact(vec![
            Complex::new(BigRational::from_integer(num_traits::pow(BigInt::from(10), 400)), BigRational::zero()),
            real(1),
        ]);
        let s = BinomialSystem::new(e, c).unwrap();
        assert!(matches!(enumerate_roots(&s, RootMode::Numeric { tolerance: 1e-8 }), Err(Error::Range(_))));
    }

    #[test]
    fn paper_toric_relations() {
        let a = PointConfiguration::from_rows(&[[0, 0], [2, 0], [0, 1], [7, 5], [6, 7]]);
        let t = toric_ideal_binomials(&a).unwrap();
        let shown: Vec<String> = t.relations.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["p1^15 p4^2 = p2^7 p3^10", "p1^9 p5 = p2^3 p3^7"]);
        assert_eq!(t.h, BigInt::one());
    }

    #[test]
    fn toric_relations_of_small_configurations() {
        let line = PointConfiguration::from_rows(&[[0], [1]]);
        let t = toric_ideal_binomials(&line).unwrap();
        assert!(t.relations.is_empty());
        assert_eq!(t.h, BigInt::one());

        let square = PointConfiguration::from_rows(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let t = toric_ideal_binomials(&square).unwrap();
        assert_eq!(t.relations.len(), 1);
        let u = t.relations[0].difference();
        for col in 0..3 {
            let s: BigInt = u
                .iter()
                .zip(square.points())
                .map(|(k, p)| k * if col < 2 { p[col] } else { 1 })
                .sum();
            assert!(s.is_zero());
        }
        // the kernel is generated by ±(1, -1, -1, 1)
        assert_eq!(u.iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![BigInt::one(); 4]);
    }
}

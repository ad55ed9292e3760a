//! Sparse polynomials with exact complex-rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::PointConfiguration;

/// Gaussian rational: exact real and imaginary parts.
pub type Coefficient = Complex<BigRational>;

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn real(n: i64) -> Coefficient {
    Complex::new(rational(n), BigRational::zero())
}

/// Parses an exact decimal or fraction: `-3`, `2.75`, `1e-3`, `-4/7`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact decimal: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let scale = exp - i32::try_from(frac_part.len()).map_err(|_| bad())?;
    let ten = BigInt::from(10);
    let mut value = BigRational::from_integer(all);
    if scale >= 0 {
        value *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= BigRational::from_integer(num_traits::pow(ten, scale.unsigned_abs() as usize));
    }
    Ok(if negative { -value } else { value })
}

/// Renders a rational as an exact string: an integer, a finite decimal, or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let mut den = q.denom().clone();
    let mut twos = 0usize;
    let mut fives = 0usize;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format!("{}/{}", q.numer(), q.denom());
    }
    let places = twos.max(fives);
    let scaled = q * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let padded = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}{int_part}.{frac_part}")
}

pub fn coefficient_to_f64(c: &Coefficient) -> Complex<f64> {
    Complex::new(c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN))
}

/// A polynomial in `num_vars` variables with nonnegative exponents.
///
/// Zero coefficients are never stored, so the key set is the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, Coefficient>,
}

impl Polynomial {
    /// Builds a polynomial, summing repeated exponents and dropping zeros.
    pub fn new(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, Coefficient)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<Vec<i64>, Coefficient> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.len() != num_vars {
                return Err(Error::Dimension(format!(
                    "exponent {exp:?} has length {}, expected {num_vars}",
                    exp.len()
                )));
            }
            if exp.iter().any(|&e| e < 0) {
                return Err(Error::InvalidInput(format!("negative exponent in {exp:?}")));
            }
            *map.entry(exp).or_insert_with(Complex::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { num_vars, terms: map })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_integer_terms(num_vars: usize, terms: &[(&[i64], i64)]) -> Result<Self> {
        Self::new(num_vars, terms.iter().map(|(e, c)| (e.to_vec(), real(*c))))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Coefficient> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> Option<&Coefficient> {
        self.terms.get(exponent)
    }

    /// The support as a point configuration, in lexicographic order.
    pub fn support(&self) -> Result<PointConfiguration> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        PointConfiguration::new(self.num_vars, self.terms.keys().cloned().collect())
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().sum::<i64>()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Keeps only the terms whose exponents satisfy `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&[i64]) -> bool) -> Polynomial {
        Polynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn evaluate(&self, x: &[Complex<f64>]) -> Complex<f64> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono = e
                    .iter()
                    .zip(x)
                    .fold(Complex::new(1.0, 0.0), |acc, (&k, xi)| acc * xi.powi(k as i32));
                coefficient_to_f64(c) * mono
            })
            .sum()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (exp, c)) in self.terms.iter().enumerate() {
            let monomial: Vec<String> = exp
                .iter()
                .zip(names)
                .filter(|(&k, _)| k != 0)
                .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
                .collect();
            let (negative, body) = format_coefficient(c, monomial.is_empty());
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            match (body.is_empty(), monomial.is_empty()) {
                (true, _) => out.push_str(&monomial.join("*")),
                (false, true) => out.push_str(&body),
                (false, false) => {
                    out.push_str(&body);
                    out.push('*');
                    out.push_str(&monomial.join("*"));
                }
            }
        }
        out
    }
}

/// Splits a coefficient into (leading sign, magnitude text). Unit magnitudes
/// in front of a monomial are omitted.
fn format_coefficient(c: &Coefficient, constant: bool) -> (bool, String) {
    if c.im.is_zero() {
        let negative = c.re.is_negative();
        let mag = c.re.abs();
        let text = if mag.is_one() && !constant { String::new() } else { format_rational(&mag) };
        (negative, text)
    } else if c.re.is_zero() {
        let negative = c.im.is_negative();
        let mag = c.im.abs();
        let text = if mag.is_one() { "i".into() } else { format!("{}i", format_rational(&mag)) };
        (negative, text)
    } else {
        let sign = if c.im.is_negative() { '-' } else { '+' };
        (false, format!("({} {sign} {}i)", format_rational(&c.re), format_rational(&c.im.abs())))
    }
}

/// `k` polynomials in a common set of `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialSystem {
    variables: Vec<String>,
    polynomials: Vec<Polynomial>,
}

impl PolynomialSystem {
    pub fn new(variables: Vec<String>, polynomials: Vec<Polynomial>) -> Result<Self> {
        if polynomials.is_empty() {
            return Err(Error::InvalidInput("a system needs at least one polynomial".into()));
        }
        if let Some(p) = polynomials.iter().find(|p| p.num_vars != variables.len()) {
            return Err(Error::Dimension(format!(
                "polynomial in {} variables, system has {}",
                p.num_vars,
                variables.len()
            )));
        }
        if polynomials.iter().any(Polynomial::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { variables, polynomials })
    }

    /// Uses `x1, x2, ...` as variable names.
    pub fn with_default_names(polynomials: Vec<Polynomial>) -> Result<Self> {
        let n = polynomials.first().map_or(0, Polynomial::num_vars);
        Self::new(default_names(n), polynomials)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    pub fn is_square(&self) -> bool {
        self.len() == self.num_vars()
    }

    pub fn supports(&self) -> Vec<PointConfiguration> {
        self.polynomials
            .iter()
            .map(|p| p.support().expect("system polynomials are nonzero"))
            .collect()
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square system, got {} polynomials in {} variables",
                self.len(),
                self.num_vars()
            )))
        }
    }
}

impl fmt::Display for PolynomialSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.polynomials {
            writeln!(f, "{}", p.display_with(&self.variables))?;
        }
        Ok(())
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["x".into()],
        2 => vec!["x".into(), "y".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        _ => (1..=n).map(|i| format!("x{i}")).collect(),
    }
}

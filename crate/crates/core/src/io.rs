//! JSON documents for point sets, polynomial systems, matrices and binomial
//! systems. Integers that may exceed 64 bits are written as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::ToPrimitive;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binomial::{BinomialSystem, Constants};
use crate::error::{Error, Result};
use crate::exact_linear::IntegerMatrix;
use crate::geometry::PointConfiguration;
use crate::polynomial::{format_rational, parse_rational, Coefficient, Polynomial, PolynomialSystem};
use crate::subdivision::LiftingFunction;

/// Parses any document type, mapping serde errors to [`Error::Parse`].
pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}

/// An integer written as a JSON number when it fits in `i64` and as a
/// decimal string otherwise. Both forms are accepted on input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntValue(pub BigInt);

impl Serialize for BigIntValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for BigIntValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(BigIntValue(v.into())),
            Raw::Str(s) => BigInt::from_str(s.trim())
                .map(BigIntValue)
                .map_err(|_| serde::de::Error::custom(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointsDocument {
    pub dimension: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lifts: Option<Vec<i64>>,
}

impl PointsDocument {
    pub fn from_configuration(a: &PointConfiguration) -> Self {
        Self { dimension: a.dim(), points: a.points().to_vec(), lifts: None }
    }

    pub fn configuration(&self) -> Result<PointConfiguration> {
        PointConfiguration::new(self.dimension, self.points.clone())
    }

    /// The lifting stored alongside the points, if any.
    pub fn lifting(&self) -> Result<Option<LiftingFunction>> {
        match &self.lifts {
            None => Ok(None),
            Some(l) if l.len() == self.points.len() => Ok(Some(LiftingFunction::explicit(l.clone()))),
            Some(l) => Err(Error::Dimension(format!("{} lifts for {} points", l.len(), self.points.len()))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub exponents: Vec<i64>,
    /// Real and imaginary parts as exact decimals or fractions.
    pub coeff: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub variables: Vec<String>,
    pub polynomials: Vec<Vec<TermDocument>>,
}

fn parse_coefficient(c: &[String; 2]) -> Result<Coefficient> {
    Ok(Complex::new(parse_rational(&c[0])?, parse_rational(&c[1])?))
}

fn format_coefficient(c: &Coefficient) -> [String; 2] {
    [format_rational(&c.re), format_rational(&c.im)]
}

impl SystemDocument {
    pub fn from_system(f: &PolynomialSystem) -> Self {
        Self {
            variables: f.variables().to_vec(),
            polynomials: f
                .polynomials()
                .iter()
                .map(|p| {
                    p.terms()
                        .iter()
                        .map(|(e, c)| TermDocument { exponents: e.clone(), coeff: format_coefficient(c) })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn system(&self) -> Result<PolynomialSystem> {
        let n = self.variables.len();
        let polys = self
            .polynomials
            .iter()
            .map(|terms| {
                let parsed = terms
                    .iter()
                    .map(|t| Ok((t.exponents.clone(), parse_coefficient(&t.coeff)?)))
                    .collect::<Result<Vec<_>>>()?;
                Polynomial::new(n, parsed)
            })
            .collect::<Result<Vec<_>>>()?;
        PolynomialSystem::new(self.variables.clone(), polys)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub rows: Vec<Vec<BigIntValue>>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &IntegerMatrix) -> Self {
        Self { rows: m.to_rows().into_iter().map(|r| r.into_iter().map(BigIntValue).collect()).collect() }
    }

    pub fn matrix(&self) -> Result<IntegerMatrix> {
        IntegerMatrix::try_from_rows(self.rows.iter().map(|r| r.iter().map(|v| v.0.clone()).collect()).collect())
    }
}

/// `x^{exponents[i]} = constants[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinomialDocument {
    pub exponents: Vec<Vec<BigIntValue>>,
    pub constants: Vec<[String; 2]>,
}

impl BinomialDocument {
    pub fn system(&self) -> Result<BinomialSystem> {
        let e = MatrixDocument { rows: self.exponents.clone() }.matrix()?;
        let c = self.constants.iter().map(parse_coefficient).collect::<Result<Vec<_>>>()?;
        BinomialSystem::new(e, Constants::Exact(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_round_trip() {
        let text = r#"{"dimension": 2, "points": [[0,0],[2,0],[0,1]], "lifts": [1,0,0]}"#;
        let doc: PointsDocument = from_json(text).unwrap();
        assert_eq!(doc.configuration().unwrap().len(), 3);
        assert_eq!(doc.lifting().unwrap().unwrap().values(), &[1, 0, 0]);
        let back: PointsDocument = from_json(&to_json(&doc)).unwrap();
        assert_eq!(back, doc);
        let bad: PointsDocument = from_json(r#"{"dimension": 2, "points": [[0,0]], "lifts": [1,2]}"#).unwrap();
        assert!(bad.lifting().is_err());
        assert!(matches!(from_json::<PointsDocument>("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn big_integers_as_strings() {
        let doc: MatrixDocument = from_json(r#"{"rows": [[1, "123456789012345678901234567890"]]}"#).unwrap();
        let m = doc.matrix().unwrap();
        assert_eq!(m.get(0, 1).to_string(), "123456789012345678901234567890");
        let text = to_json(&MatrixDocument::from_matrix(&m));
        assert!(text.contains("\"123456789012345678901234567890\""));
        assert!(from_json::<MatrixDocument>(r#"{"rows": [["x"]]}"#).is_err());
    }

    #[test]
    fn system_round_trip() {
        let text = r#"{"variables": ["x", "y"], "polynomials": [
            [{"exponents": [0, 0], "coeff": ["-2", "0"]}, {"exponents": [2, 0], "coeff": ["1/2", "0.25"]}],
            [{"exponents": [0, 1], "coeff": ["3", "0"]}, {"exponents": [1, 0], "coeff": ["1", "0"]}]
        ]}"#;
        let f = from_json::<SystemDocument>(text).unwrap().system().unwrap();
        assert_eq!(f.len(), 2);
        let again = SystemDocument::from_system(&f).system().unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn binomial_document() {
        let doc: BinomialDocument =
            from_json(r#"{"exponents": [[2, 0], [0, 3]], "constants": [["1", "0"], ["-8", "0"]]}"#).unwrap();
        assert_eq!(doc.system().unwrap().dim(), 2);
        let zero: BinomialDocument = from_json(r#"{"exponents": [[1]], "constants": [["0", "0"]]}"#).unwrap();
        assert!(zero.system().is_err());
    }
}

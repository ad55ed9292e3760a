use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant maps to a stable machine-readable code (see [`Error::code`]),
/// which the command-line front end reports on failure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("normal vector must be nonzero")]
    ZeroNormal,

    #[error("polynomial has no nonzero terms")]
    ZeroPolynomial,

    #[error("ambient dimension {dim} exceeds the supported maximum of {max}")]
    DimensionGuard { dim: usize, max: usize },

    #[error("matrix size {size} exceeds the supported maximum of {max}")]
    SizeGuard { size: usize, max: usize },

    #[error("exponent matrix is singular; the binomial system has no finite root count")]
    NonFinite,

    #[error("numeric range exceeded: {0}")]
    Range(String),

    #[error("root residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("no generic lifting found after {attempts} attempts")]
    GenericityExhausted { attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension_mismatch",
            Error::InvalidInput(_) => "invalid_input",
            Error::ZeroNormal => "zero_normal",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::DimensionGuard { .. } => "dimension_guard",
            Error::SizeGuard { .. } => "size_guard",
            Error::NonFinite => "non_finite",
            Error::Range(_) => "range",
            Error::Residual { .. } => "residual",
            Error::GenericityExhausted { .. } => "genericity_exhausted",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

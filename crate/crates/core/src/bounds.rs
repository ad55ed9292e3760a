//! Root-count bounds for polynomial systems and Cayley configurations.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_linear::IntegerMatrix;
use crate::geometry::{normalized_volume, PointConfiguration};
use crate::mixed_volume::{self, permanent, Strategy};
use crate::polynomial::PolynomialSystem;

/// Product of the total degrees.
pub fn bezout_bound(f: &PolynomialSystem) -> Result<BigInt> {
    f.require_square()?;
    Ok(f.polynomials().iter().map(|p| BigInt::from(p.total_degree())).product())
}

/// Multihomogeneous Bézout bound for the partition of the variables into
/// singletons: the permanent of `d[i][j] = deg_{x_j} f_i`.
pub fn multigraded_bound(f: &PolynomialSystem) -> Result<BigInt> {
    f.require_square()?;
    let n = f.num_vars();
    let rows: Vec<Vec<i64>> =
        f.polynomials().iter().map(|p| (0..n).map(|j| p.degree_in(j)).collect()).collect();
    permanent(&IntegerMatrix::from_rows(&rows))
}

/// Generic root count of an unmixed system with support `a`.
pub fn kushnirenko_bound(a: &PointConfiguration) -> Result<BigInt> {
    normalized_volume(a)
}

/// Mixed volume of the supports.
pub fn bkk_bound(f: &PolynomialSystem) -> Result<BigInt> {
    f.require_square()?;
    Ok(mixed_volume::mixed_volume(&f.supports(), Strategy::Auto, mixed_volume::DEFAULT_SEED)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentBranch {
    /// Fewer equations than variables: a single normalized volume.
    Underdetermined,
    /// At least as many equations as variables: a mixed volume in `R^k`.
    Overdetermined,
}

impl ComponentBranch {
    pub fn label(self) -> &'static str {
        match self {
            ComponentBranch::Underdetermined => "k<n",
            ComponentBranch::Overdetermined => "k>=n",
        }
    }
}

/// Bound on the number of connected components of the zero set in `C^n` of
/// `k` polynomials in `n` variables.
///
/// For `k < n` this is `Vol(B)` with `B = {O, e_1, ..., e_n} ∪ A_1 ∪ ⋯ ∪ A_k`.
/// For `k >= n` each support is zero-padded into `Z^k` and the result is
/// `M({O, e_1} ∪ A_1, ..., {O, e_k} ∪ A_k)` in `R^k`.
pub fn component_bound(f: &PolynomialSystem) -> Result<(BigInt, ComponentBranch)> {
    let (k, n) = (f.len(), f.num_vars());
    let supports = f.supports();
    if k < n {
        let mut pts = vec![vec![0i64; n]];
        pts.extend((0..n).map(|i| unit(n, i)));
        pts.extend(supports.iter().flat_map(|a| a.points().iter().cloned()));
        let b = PointConfiguration::dedup(n, pts)?;
        return Ok((normalized_volume(&b)?, ComponentBranch::Underdetermined));
    }
    let configs = supports
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut pts = vec![vec![0i64; k], unit(k, i)];
            pts.extend(a.points().iter().map(|p| {
                let mut q = p.clone();
                q.resize(k, 0);
                q
            }));
            PointConfiguration::dedup(k, pts)
        })
        .collect::<Result<Vec<_>>>()?;
    let m = mixed_volume::mixed_volume(&configs, Strategy::Auto, mixed_volume::DEFAULT_SEED)?;
    Ok((m.value, ComponentBranch::Overdetermined))
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `A_1 × {0} ∪ A_2 × {e_1} ∪ ⋯ ∪ A_k × {e_{k-1}}` in `Z^{n+k-1}`.
pub fn cayley_configuration(configs: &[PointConfiguration]) -> Result<PointConfiguration> {
    let Some(first) = configs.first() else {
        return Err(Error::InvalidInput("Cayley configuration of no point sets".into()));
    };
    let n = first.dim();
    if let Some(c) = configs.iter().find(|c| c.dim() != n) {
        return Err(Error::Dimension(format!("mixed ambient dimensions {n} and {}", c.dim())));
    }
    let k = configs.len();
    let mut pts = Vec::with_capacity(configs.iter().map(PointConfiguration::len).sum());
    for (i, a) in configs.iter().enumerate() {
        for p in a.points() {
            let mut q = p.clone();
            q.resize(n + k - 1, 0);
            if i > 0 {
                q[n + i - 1] = 1;
            }
            pts.push(q);
        }
    }
    PointConfiguration::new(n + k - 1, pts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Square systems only.
    pub bezout: Option<BigInt>,
    /// Square systems only.
    pub multigraded: Option<BigInt>,
    /// Normalized volume of the union of the supports.
    pub kushnirenko_union: BigInt,
    /// Square systems only.
    pub bkk: Option<BigInt>,
    pub component_bound: BigInt,
    pub branch: ComponentBranch,
}

pub fn bound_report(f: &PolynomialSystem) -> Result<BoundReport> {
    let n = f.num_vars();
    let union = PointConfiguration::dedup(
        n,
        f.supports().iter().flat_map(|a| a.points().iter().cloned()).collect(),
    )?;
    let square = f.is_square();
    let (component_bound, branch) = component_bound(f)?;
    Ok(BoundReport {
        bezout: square.then(|| bezout_bound(f)).transpose()?,
        multigraded: square.then(|| multigraded_bound(f)).transpose()?,
        kushnirenko_union: kushnirenko_bound(&union)?,
        bkk: square.then(|| bkk_bound(f)).transpose()?,
        component_bound,
        branch,
    })
}

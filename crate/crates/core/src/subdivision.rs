//! Lifting functions and the (mixed) subdivisions they induce.
//!
//! A lifting `ω` of a configuration `A ⊂ Z^n` places each point at height
//! `ω(a)`. The lower facets of the lifted configuration, those with an inner
//! normal whose last coordinate is positive, project to the cells of a
//! regular subdivision of `conv(A)`. For several configurations the same
//! construction on the lifted Minkowski sum gives a mixed subdivision.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{self, exact};
use crate::error::{Error, Result};
use crate::geometry::{self, dd, PointConfiguration};
use crate::polynomial::PolynomialSystem;

/// How many liftings [`random_generic_lifting`] tries before giving up.
pub const MAX_LIFT_ATTEMPTS: usize = 32;

/// Lifts never exceed this, keeping lifted coordinates well inside `i64`.
const MAX_LIFT_RANGE: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftingProvenance {
    Explicit,
    SeededRandom { seed: u64, range: i64 },
}

/// Integer heights for the points of one configuration, in point order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingFunction {
    values: Vec<i64>,
    provenance: LiftingProvenance,
}

impl LiftingFunction {
    pub fn explicit(values: Vec<i64>) -> Self {
        Self { values, provenance: LiftingProvenance::Explicit }
    }

    pub fn zero(len: usize) -> Self {
        Self::explicit(vec![0; len])
    }

    /// Evaluates `f` on every point of `a`.
    pub fn from_fn(a: &PointConfiguration, f: impl Fn(&[i64]) -> i64) -> Self {
        Self::explicit(a.points().iter().map(|p| f(p)).collect())
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn provenance(&self) -> LiftingProvenance {
        self.provenance
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The points `(a, ω(a))` of a lifted configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedConfiguration {
    base: PointConfiguration,
    lifted: PointConfiguration,
}

impl LiftedConfiguration {
    pub fn new(base: &PointConfiguration, omega: &LiftingFunction) -> Result<Self> {
        if omega.len() != base.len() {
            return Err(Error::Dimension(format!(
                "{} lift values for {} points",
                omega.len(),
                base.len()
            )));
        }
        let points = base
            .points()
            .iter()
            .zip(&omega.values)
            .map(|(p, &h)| {
                let mut q = p.clone();
                q.push(h);
                q
            })
            .collect();
        Ok(Self { base: base.clone(), lifted: PointConfiguration::new(base.dim() + 1, points)? })
    }

    pub fn base(&self) -> &PointConfiguration {
        &self.base
    }

    pub fn lifted(&self) -> &PointConfiguration {
        &self.lifted
    }
}

/// One full-dimensional cell of a (mixed) subdivision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionCell {
    /// The cell's part in each input configuration.
    pub parts: Vec<PointConfiguration>,
    /// Positions of each part's points in its input configuration.
    pub indices: Vec<Vec<usize>>,
    /// Primitive inner normal in `Z^{n+1}` of the lower facet that projects
    /// onto this cell; its last coordinate is positive.
    pub witness: Vec<BigInt>,
    /// Affine dimension of each part.
    pub cell_type: Vec<usize>,
}

impl SubdivisionCell {
    /// A cell of type `(1, ..., 1)`.
    pub fn is_mixed(&self) -> bool {
        self.cell_type.iter().all(|&t| t == 1)
    }

    /// Every part is affinely independent.
    pub fn is_fine(&self) -> bool {
        self.parts.iter().zip(&self.cell_type).all(|(p, &t)| p.len() == t + 1)
    }

    /// Normalized volume of the Minkowski sum of the parts.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        let parts: Vec<&PointConfiguration> = self.parts.iter().collect();
        geometry::normalized_volume(&geometry::minkowski_vertices_many(&parts)?)
    }

    /// For a mixed cell, `|det(q_1 - p_1, ..., q_n - p_n)|` over the edges
    /// `[p_i, q_i]` of its parts.
    pub fn mixed_contribution(&self) -> Option<BigInt> {
        if !self.is_mixed() || self.parts.len() != self.parts.first()?.dim() {
            return None;
        }
        let edges: Vec<Vec<i64>> = self
            .parts
            .iter()
            .map(|part| {
                let lo = part.points().iter().min().expect("nonempty part");
                let hi = part.points().iter().max().expect("nonempty part");
                hi.iter().zip(lo).map(|(a, b)| a - b).collect()
            })
            .collect();
        Some(geometry::det_i64(&edges).abs())
    }
}

/// Cells of the subdivision of `(conv A_1, ..., conv A_k)` induced by the
/// given liftings, ordered lexicographically by witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedSubdivision {
    inputs: Vec<PointConfiguration>,
    lifts: Vec<LiftingFunction>,
    cells: Vec<SubdivisionCell>,
}

impl MixedSubdivision {
    pub fn inputs(&self) -> &[PointConfiguration] {
        &self.inputs
    }

    pub fn lifts(&self) -> &[LiftingFunction] {
        &self.lifts
    }

    pub fn cells(&self) -> &[SubdivisionCell] {
        &self.cells
    }

    pub fn mixed_cells(&self) -> impl Iterator<Item = &SubdivisionCell> {
        self.cells.iter().filter(|c| c.is_mixed())
    }

    pub fn dim(&self) -> usize {
        self.inputs.first().map_or(0, PointConfiguration::dim)
    }

    /// Every cell satisfies `Σ dim parts[i] = n`.
    pub fn satisfies_dimension_equation(&self) -> bool {
        let n = self.dim();
        self.cells.iter().all(|c| c.cell_type.iter().sum::<usize>() == n)
    }

    /// The genericity certificate: a triangulation for a single
    /// configuration, and a fine mixed subdivision for several.
    pub fn is_certified_generic(&self) -> bool {
        let n = self.dim();
        if self.inputs.len() == 1 {
            self.cells.iter().all(|c| c.parts[0].len() == n + 1)
        } else {
            self.satisfies_dimension_equation() && self.cells.iter().all(SubdivisionCell::is_fine)
        }
    }

    /// Sum of the cells' normalized volumes.
    pub fn total_normalized_volume(&self) -> Result<BigInt> {
        self.cells.iter().map(SubdivisionCell::normalized_volume).sum()
    }
}

/// The regular subdivision of `conv(A)` induced by `ω`.
///
/// Lower-dimensional configurations have no full-dimensional cells. An
/// affine lifting gives the single cell `conv(A)`.
pub fn induced_subdivision(a: &PointConfiguration, omega: &LiftingFunction) -> Result<MixedSubdivision> {
    let lifted = LiftedConfiguration::new(a, omega)?;
    let n = a.dim();
    let mut cells = Vec::new();
    if a.affine_dimension() == Some(n) {
        for (witness, indices) in lower_facets(lifted.lifted().points(), n) {
            cells.push(SubdivisionCell {
                parts: vec![sub_configuration(a, &indices)],
                indices: vec![indices],
                witness,
                cell_type: vec![n],
            });
        }
    }
    cells.sort_by(|x, y| x.witness.cmp(&y.witness));
    Ok(MixedSubdivision { inputs: vec![a.clone()], lifts: vec![omega.clone()], cells })
}

/// Lower facets of a lifted configuration whose base is full-dimensional.
fn lower_facets(lifted: &[Vec<i64>], n: usize) -> Vec<(Vec<BigInt>, Vec<usize>)> {
    if n == 0 {
        return vec![(vec![BigInt::from(1)], (0..lifted.len()).collect())];
    }
    if geometry::rank_i64(&differences(lifted)) == n + 1 {
        return dd::facets(lifted)
            .into_iter()
            .filter(|f| f.normal[n].is_positive())
            .map(|f| (f.normal, f.incident))
            .collect();
    }
    // The lifted points span a hyperplane: one cell with the hyperplane's normal.
    let diffs = differences(lifted);
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(n);
    for d in diffs {
        let mut trial = basis.clone();
        trial.push(d);
        if geometry::rank_i64(&trial) == trial.len() {
            basis = trial;
        }
        if basis.len() == n {
            break;
        }
    }
    let mut w = cross_i64(&basis);
    if w[n].is_negative() {
        w.iter_mut().for_each(|x| *x = -std::mem::take(x));
    }
    arith::bigint_primitive(&mut w);
    vec![(w, (0..lifted.len()).collect())]
}

fn differences(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(first) = points.first() else { return Vec::new() };
    points[1..].iter().map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect()).collect()
}

fn cross_i64(vectors: &[Vec<i64>]) -> Vec<BigInt> {
    fn go<T: arith::Ring>(vectors: &[Vec<i64>]) -> Option<Vec<BigInt>> {
        let lifted: Vec<Vec<T>> = vectors.iter().map(|v| arith::lift_vec(v)).collect();
        Some(arith::to_bigints(&arith::cross(&lifted)?))
    }
    exact!(go(vectors))
}

fn sub_configuration(a: &PointConfiguration, indices: &[usize]) -> PointConfiguration {
    PointConfiguration::new(a.dim(), indices.iter().map(|&i| a.points()[i].clone()).collect())
        .expect("subsets of a configuration are valid")
}

/// The mixed subdivision of `(conv A_1, ..., conv A_k)` induced by the
/// liftings `ω_1, ..., ω_k`.
///
/// Each lower facet of the lifted Minkowski sum is spanned by edge
/// directions of the lifted summands, and the edges of a lower face of
/// `Â_i` lie in a single cell of the subdivision induced by `ω_i`. The
/// candidate normals are therefore the normals of `n`-tuples of such
/// directions; each is kept if the faces it selects span a facet.
pub fn induced_mixed_subdivision(
    configs: &[PointConfiguration],
    lifts: &[LiftingFunction],
) -> Result<MixedSubdivision> {
    if configs.is_empty() {
        return Err(Error::InvalidInput("no configurations to subdivide".into()));
    }
    if configs.len() != lifts.len() {
        return Err(Error::Dimension(format!(
            "{} configurations but {} liftings",
            configs.len(),
            lifts.len()
        )));
    }
    let n = configs[0].dim();
    if configs.iter().any(|c| c.dim() != n) {
        return Err(Error::Dimension("configurations live in different spaces".into()));
    }
    if configs.iter().any(PointConfiguration::is_empty) {
        return Err(Error::InvalidInput("empty configuration".into()));
    }
    if configs.len() == 1 {
        return induced_subdivision(&configs[0], &lifts[0]);
    }
    let lifted: Vec<LiftedConfiguration> = configs
        .iter()
        .zip(lifts)
        .map(|(c, w)| LiftedConfiguration::new(c, w))
        .collect::<Result<_>>()?;
    let result = |cells| MixedSubdivision { inputs: configs.to_vec(), lifts: lifts.to_vec(), cells };

    let all_diffs: Vec<Vec<i64>> = configs.iter().flat_map(|c| differences(c.points())).collect();
    if n == 0 || geometry::rank_i64(&all_diffs) < n {
        return Ok(result(Vec::new()));
    }

    let mut directions: BTreeSet<Vec<i64>> = BTreeSet::new();
    for (c, (config, omega)) in configs.iter().zip(lifts).enumerate() {
        let points = lifted[c].lifted().points();
        let groups: Vec<Vec<usize>> = if config.affine_dimension() == Some(n) {
            induced_subdivision(config, omega)?.cells.into_iter().map(|cell| cell.indices[0].clone()).collect()
        } else {
            vec![(0..config.len()).collect()]
        };
        for group in groups {
            for (x, &i) in group.iter().enumerate() {
                for &j in &group[x + 1..] {
                    let mut d: Vec<i64> = points[j].iter().zip(&points[i]).map(|(a, b)| a - b).collect();
                    normalize_direction(&mut d);
                    directions.insert(d);
                }
            }
        }
    }
    let directions: Vec<Vec<i64>> = directions.into_iter().collect();

    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut cells: BTreeMap<Vec<BigInt>, SubdivisionCell> = BTreeMap::new();
    for_each_combination(directions.len(), n, |combo| {
        let chosen: Vec<Vec<i64>> = combo.iter().map(|&k| directions[k].clone()).collect();
        let mut y = cross_i64(&chosen);
        if y[n].is_zero() {
            return;
        }
        if y[n].is_negative() {
            y.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
        arith::bigint_primitive(&mut y);
        if !seen.insert(y.clone()) {
            return;
        }
        let faces: Vec<Vec<usize>> =
            lifted.iter().map(|l| geometry::argmin(l.lifted().points(), &y)).collect();
        let mut span: Vec<Vec<i64>> = Vec::new();
        let mut cell_type = Vec::with_capacity(faces.len());
        for (config, face) in configs.iter().zip(&faces) {
            let pts: Vec<Vec<i64>> = face.iter().map(|&i| config.points()[i].clone()).collect();
            let diffs = differences(&pts);
            cell_type.push(if diffs.is_empty() { 0 } else { geometry::rank_i64(&diffs) });
            span.extend(diffs);
        }
        if geometry::rank_i64(&span) != n {
            return;
        }
        let parts = configs.iter().zip(&faces).map(|(c, f)| sub_configuration(c, f)).collect();
        cells.insert(y.clone(), SubdivisionCell { parts, indices: faces, witness: y, cell_type });
    });
    Ok(result(cells.into_values().collect()))
}

/// Scales a nonzero direction to be primitive with a positive leading entry.
fn normalize_direction(d: &mut [i64]) {
    let g = d.iter().fold(0i64, |g, &x| num_integer::Integer::gcd(&g, &x));
    if g > 1 {
        d.iter_mut().for_each(|x| *x /= g);
    }
    if d.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        d.iter_mut().for_each(|x| *x = -*x);
    }
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Default lift range for `points` points in total: `4 * points^2`.
pub fn default_lift_range(points: usize) -> i64 {
    let p = points.max(1) as i64;
    (4 * p * p).min(MAX_LIFT_RANGE)
}

/// Draws uniform lifts in `[0, range]` until the induced subdivision is
/// certified generic, doubling the range after each failure.
///
/// For one configuration the certificate is that every cell is a simplex.
/// For several, every cell must satisfy the dimension equation and every
/// part must be affinely independent. The result depends only on the inputs
/// and the seed.
pub fn random_generic_lifting(
    configs: &[PointConfiguration],
    seed: u64,
    range: Option<i64>,
) -> Result<MixedSubdivision> {
    let total: usize = configs.iter().map(PointConfiguration::len).sum();
    let mut range = range.unwrap_or_else(|| default_lift_range(total));
    if range < 1 {
        return Err(Error::InvalidInput(format!("lift range must be positive, got {range}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_LIFT_ATTEMPTS {
        let lifts: Vec<LiftingFunction> = configs
            .iter()
            .map(|c| LiftingFunction {
                values: (0..c.len()).map(|_| rng.gen_range(0..=range)).collect(),
                provenance: LiftingProvenance::SeededRandom { seed, range },
            })
            .collect();
        let sub = induced_mixed_subdivision(configs, &lifts)?;
        if sub.is_certified_generic() {
            return Ok(sub);
        }
        range = range.saturating_mul(2).min(MAX_LIFT_RANGE);
    }
    Err(Error::GenericityExhausted { attempts: MAX_LIFT_ATTEMPTS })
}

/// Simplices of a regular triangulation of a full-dimensional configuration.
pub(crate) fn triangulate(a: &PointConfiguration, seed: u64) -> Result<Vec<Vec<usize>>> {
    let sub = random_generic_lifting(std::slice::from_ref(a), seed, None)?;
    Ok(sub.cells.into_iter().map(|c| c.indices.into_iter().next().expect("one part")).collect())
}

/// Restricts each polynomial to the terms minimizing `w . e`.
pub fn initial_term_system(f: &PolynomialSystem, w: &[i64]) -> Result<PolynomialSystem> {
    if w.len() != f.num_vars() {
        return Err(Error::Dimension(format!(
            "weight has length {}, system has {} variables",
            w.len(),
            f.num_vars()
        )));
    }
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroNormal);
    }
    let w_big: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
    let polys = f
        .polynomials()
        .iter()
        .map(|p| {
            let exps: Vec<Vec<i64>> = p.terms().keys().cloned().collect();
            let keep: HashSet<Vec<i64>> =
                geometry::argmin(&exps, &w_big).into_iter().map(|i| exps[i].clone()).collect();
            p.restrict(|e| keep.contains(e))
        })
        .collect();
    PolynomialSystem::new(f.variables().to_vec(), polys)
}

/// Multiplies each term `c x^a` of `f_i` by `t^{ω_i(a)}`, where `ω_i` is
/// aligned with the support of `f_i` in its lexicographic order.
pub fn lift_system(f: &PolynomialSystem, lifts: &[LiftingFunction]) -> Result<PolynomialSystem> {
    if lifts.len() != f.len() {
        return Err(Error::Dimension(format!(
            "{} liftings for {} polynomials",
            lifts.len(),
            f.len()
        )));
    }
    let n = f.num_vars();
    let mut polys = Vec::with_capacity(f.len());
    for (p, omega) in f.polynomials().iter().zip(lifts) {
        if omega.len() != p.terms().len() {
            return Err(Error::Dimension(format!(
                "{} lift values for {} terms",
                omega.len(),
                p.terms().len()
            )));
        }
        if omega.values.iter().any(|&h| h < 0) {
            return Err(Error::InvalidInput("lifts of a polynomial system must be nonnegative".into()));
        }
        let terms = p.terms().iter().zip(&omega.values).map(|((e, c), &h)| {
            let mut e = e.clone();
            e.push(h);
            (e, c.clone())
        });
        polys.push(crate::polynomial::Polynomial::new(n + 1, terms)?);
    }
    let mut names = f.variables().to_vec();
    let mut t = String::from("t");
    while names.contains(&t) {
        t.push('_');
    }
    names.push(t);
    PolynomialSystem::new(names, polys)
}

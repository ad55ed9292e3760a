//! Lattice point configurations and their convex hulls.
//!
//! Every predicate is evaluated in exact integer arithmetic. Coordinates are
//! `i64`; intermediate quantities use checked `i128` with a `BigInt` fallback.

pub(crate) mod dd;
pub(crate) mod hull2d;

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::arith::{self, exact};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;

/// Largest ambient dimension accepted by hull and volume computations.
pub const MAX_DIMENSION: usize = 8;

/// Seed used when a volume computation needs a generic lifting and the
/// caller did not supply one.
pub const DEFAULT_VOLUME_SEED: u64 = 0x5eed;

/// Bound on coordinate magnitudes, so that differences of points fit in `i64`.
pub const MAX_COORDINATE: i64 = 1 << 62;

/// A finite set of distinct lattice points in `Z^n`, in a fixed order.
///
/// Coordinates are bounded by [`MAX_COORDINATE`] in absolute value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl PointConfiguration {
    /// Rejects ragged or repeated points.
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::Dimension(format!(
                "point {p:?} does not lie in Z^{dim}"
            )));
        }
        if points.iter().flatten().any(|c| c.unsigned_abs() > MAX_COORDINATE as u64) {
            return Err(Error::Range("coordinates must lie in [-2^62, 2^62]".into()));
        }
        let mut seen = HashSet::with_capacity(points.len());
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::InvalidInput(format!("repeated point {p:?}")));
            }
        }
        Ok(Self { dim, points })
    }

    /// Like [`PointConfiguration::new`] but silently drops repeats, keeping
    /// first occurrences.
    pub fn dedup(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        let unique: Vec<Vec<i64>> = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        Self::new(dim, unique)
    }

    /// Panicking convenience constructor for literals.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let dim = rows.first().map_or(0, |r| r.as_ref().len());
        Self::new(dim, rows.iter().map(|r| r.as_ref().to_vec()).collect())
            .expect("invalid point literal")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    /// Dimension of the affine hull; `None` for the empty configuration.
    pub fn affine_dimension(&self) -> Option<usize> {
        let first = self.points.first()?;
        if self.dim == 2 && self.points.len() > 64 {
            let h = hull2d::hull(&self.planar());
            return Some(h.len().min(3) - 1);
        }
        let diffs: Vec<Vec<i64>> = self.points[1..]
            .iter()
            .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
            .collect();
        Some(rank_i64(&diffs))
    }

    pub fn translate(&self, v: &[i64]) -> Result<Self> {
        self.map_points(|p| {
            p.iter()
                .zip(v)
                .map(|(a, b)| a.checked_add(*b))
                .collect::<Option<Vec<i64>>>()
        })
    }

    /// Applies `p -> M p` for a square integer matrix given by rows.
    pub fn transform(&self, m: &[Vec<i64>]) -> Result<Self> {
        if m.len() != self.dim || m.iter().any(|r| r.len() != self.dim) {
            return Err(Error::Dimension("transform must be a square matrix".into()));
        }
        self.map_points(|p| {
            m.iter()
                .map(|row| {
                    let s: i128 = row.iter().zip(p).map(|(a, b)| *a as i128 * *b as i128).sum();
                    i64::try_from(s).ok()
                })
                .collect()
        })
    }

    /// Scales every point by `k`.
    pub fn dilate(&self, k: i64) -> Result<Self> {
        self.map_points(|p| p.iter().map(|a| a.checked_mul(k)).collect())
    }

    fn map_points(&self, f: impl Fn(&[i64]) -> Option<Vec<i64>>) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|p| f(p).ok_or_else(|| Error::Range("coordinate overflow".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::dedup(self.dim, points)
    }

    pub(crate) fn planar(&self) -> Vec<[i64; 2]> {
        debug_assert_eq!(self.dim, 2);
        self.points.iter().map(|p| [p[0], p[1]]).collect()
    }
}

impl fmt::Display for PointConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self
            .points
            .iter()
            .map(|p| {
                let c: Vec<String> = p.iter().map(ToString::to_string).collect();
                format!("({})", c.join(","))
            })
            .collect();
        write!(f, "{{{}}}", pts.join(", "))
    }
}

pub(crate) fn rank_i64(rows: &[Vec<i64>]) -> usize {
    exact!(rank_lifted(rows))
}

fn rank_lifted<T: arith::Ring>(rows: &[Vec<i64>]) -> Option<usize> {
    arith::rank(rows.iter().map(|r| arith::lift_vec::<T>(r)).collect())
}

/// A facet inequality `normal . y >= offset`, tight on the facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    pub fn value(&self, p: &[i64]) -> BigInt {
        self.normal.iter().zip(p).map(|(a, &b)| a * b).sum()
    }
}

/// The convex hull of a point configuration.
///
/// Vertices are listed counter-clockwise from the lexicographic minimum in
/// the plane and lexicographically otherwise. For a lower-dimensional hull
/// the facets are those of the hull inside its affine span, with normals
/// that vanish on the coordinates used to eliminate the span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    source: PointConfiguration,
    affine_dim: usize,
    vertex_indices: Vec<usize>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    pub fn source(&self) -> &PointConfiguration {
        &self.source
    }

    pub fn affine_dimension(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.source.dim
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    pub fn vertices(&self) -> Vec<Vec<i64>> {
        self.vertex_indices.iter().map(|&i| self.source.points[i].clone()).collect()
    }

    /// The vertices as a configuration of their own.
    pub fn vertex_configuration(&self) -> PointConfiguration {
        PointConfiguration { dim: self.source.dim, points: self.vertices() }
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }
}

/// Computes the hull of a nonempty configuration in dimension at most
/// [`MAX_DIMENSION`].
pub fn convex_hull(a: &PointConfiguration) -> Result<LatticePolytope> {
    if a.dim > MAX_DIMENSION {
        return Err(Error::DimensionGuard { dim: a.dim, max: MAX_DIMENSION });
    }
    if a.is_empty() {
        return Err(Error::InvalidInput("convex hull of an empty configuration".into()));
    }
    if a.dim == 2 {
        return Ok(hull_planar(a));
    }
    let k = a.affine_dimension().expect("nonempty");
    if k == a.dim {
        return Ok(hull_full(a));
    }
    if k == 0 {
        return Ok(LatticePolytope {
            source: a.clone(),
            affine_dim: 0,
            vertex_indices: vec![0],
            facets: Vec::new(),
        });
    }
    let coords = spanning_coordinates(a, k);
    let projected = PointConfiguration {
        dim: k,
        points: a.points.iter().map(|p| coords.iter().map(|&c| p[c]).collect()).collect(),
    };
    let inner = convex_hull(&projected)?;
    let facets = inner
        .facets
        .iter()
        .map(|f| {
            let mut normal = vec![BigInt::zero(); a.dim];
            for (slot, &c) in coords.iter().enumerate() {
                normal[c] = f.normal[slot].clone();
            }
            Facet { normal, offset: f.offset.clone() }
        })
        .collect();
    let mut vertex_indices = inner.vertex_indices;
    if k != 2 {
        vertex_indices.sort_by(|&i, &j| a.points[i].cmp(&a.points[j]));
    }
    Ok(LatticePolytope { source: a.clone(), affine_dim: k, vertex_indices, facets })
}

/// Greedy choice of `k` coordinates on which the projection of the affine
/// span of `a` is injective.
fn spanning_coordinates(a: &PointConfiguration, k: usize) -> Vec<usize> {
    let first = &a.points[0];
    let diffs: Vec<Vec<i64>> = a.points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(x, y)| x - y).collect())
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    for c in 0..a.dim {
        if chosen.len() == k {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(c);
        let sub: Vec<Vec<i64>> = diffs.iter().map(|d| trial.iter().map(|&t| d[t]).collect()).collect();
        if rank_i64(&sub) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

fn hull_planar(a: &PointConfiguration) -> LatticePolytope {
    let pts = a.planar();
    let h = hull2d::hull(&pts);
    let index: HashMap<[i64; 2], usize> = pts.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let vertex_indices: Vec<usize> = h.iter().map(|p| index[p]).collect();
    let facets = match h.len() {
        1 => Vec::new(),
        2 => {
            // Relative facets of a segment: the two endpoints along the
            // first coordinate on which they differ.
            let c = usize::from(h[0][0] == h[1][0]);
            vec![
                Facet { normal: unit(2, c, 1), offset: BigInt::from(h[0][c]) },
                Facet { normal: unit(2, c, -1), offset: BigInt::from(-h[1][c]) },
            ]
        }
        _ => {
            let mut facets: Vec<Facet> = (0..h.len())
                .map(|i| {
                    let p = h[i];
                    let q = h[(i + 1) % h.len()];
                    let mut normal = vec![
                        BigInt::from(p[1] as i128 - q[1] as i128),
                        BigInt::from(q[0] as i128 - p[0] as i128),
                    ];
                    arith::bigint_primitive(&mut normal);
                    let offset = &normal[0] * p[0] + &normal[1] * p[1];
                    Facet { normal, offset }
                })
                .collect();
            facets.sort();
            facets
        }
    };
    LatticePolytope {
        source: a.clone(),
        affine_dim: h.len().min(3) - 1,
        vertex_indices,
        facets,
    }
}

fn unit(dim: usize, c: usize, sign: i64) -> Vec<BigInt> {
    (0..dim).map(|i| BigInt::from(if i == c { sign } else { 0 })).collect()
}

fn hull_full(a: &PointConfiguration) -> LatticePolytope {
    let d = a.dim;
    if d == 1 {
        let (lo, hi) = min_max_index(a, 0);
        return LatticePolytope {
            source: a.clone(),
            affine_dim: 1,
            vertex_indices: vec![lo, hi],
            facets: vec![
                Facet { normal: unit(1, 0, 1), offset: BigInt::from(a.points[lo][0]) },
                Facet { normal: unit(1, 0, -1), offset: BigInt::from(-a.points[hi][0]) },
            ],
        };
    }
    let raw = dd::facets(&a.points);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); a.len()];
    for (f, facet) in raw.iter().enumerate() {
        for &i in &facet.incident {
            incident[i].push(f);
        }
    }
    let mut vertex_indices: Vec<usize> = (0..a.len())
        .filter(|&i| {
            incident[i].len() >= d && {
                let rows: Vec<Vec<BigInt>> =
                    incident[i].iter().map(|&f| raw[f].normal.clone()).collect();
                arith::rank(rows).expect("BigInt arithmetic cannot overflow") == d
            }
        })
        .collect();
    vertex_indices.sort_by(|&i, &j| a.points[i].cmp(&a.points[j]));
    let facets = raw.into_iter().map(|f| Facet { normal: f.normal, offset: f.offset }).collect();
    LatticePolytope { source: a.clone(), affine_dim: d, vertex_indices, facets }
}

fn min_max_index(a: &PointConfiguration, c: usize) -> (usize, usize) {
    let lo = (0..a.len()).min_by_key(|&i| a.points[i][c]).expect("nonempty");
    let hi = (0..a.len()).max_by_key(|&i| a.points[i][c]).expect("nonempty");
    (lo, hi)
}

/// The face of `a` minimizing `w . y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub normal: Vec<i64>,
    pub points: PointConfiguration,
    /// Positions of the face's points in the source configuration.
    pub indices: Vec<usize>,
}

pub fn face(a: &PointConfiguration, w: &[i64]) -> Result<Face> {
    if w.len() != a.dim {
        return Err(Error::Dimension(format!(
            "normal has length {}, configuration lives in Z^{}",
            w.len(),
            a.dim
        )));
    }
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroNormal);
    }
    let w_big: Vec<BigInt> = w.iter().map(|&x| BigInt::from(x)).collect();
    let indices = argmin(&a.points, &w_big);
    let points = indices.iter().map(|&i| a.points[i].clone()).collect();
    Ok(Face {
        normal: w.to_vec(),
        points: PointConfiguration { dim: a.dim, points },
        indices,
    })
}

/// Indices of the points minimizing `w . p`.
pub(crate) fn argmin(points: &[Vec<i64>], w: &[BigInt]) -> Vec<usize> {
    let small: Option<Vec<i64>> = w.iter().map(|x| i64::try_from(x).ok()).collect();
    if let Some(ws) = small {
        let vals: Option<Vec<i128>> = points
            .iter()
            .map(|p| {
                p.iter().zip(&ws).try_fold(0i128, |acc, (&a, &b)| {
                    acc.checked_add((a as i128).checked_mul(b as i128)?)
                })
            })
            .collect();
        if let Some(vals) = vals {
            let min = vals.iter().min().copied();
            return (0..points.len()).filter(|&i| Some(vals[i]) == min).collect();
        }
    }
    let vals: Vec<BigInt> =
        points.iter().map(|p| p.iter().zip(w).map(|(&a, b)| b * a).sum()).collect();
    let min = vals.iter().min().cloned();
    (0..points.len()).filter(|&i| Some(&vals[i]) == min.as_ref()).collect()
}

/// Hull of `P + Q`. Planar sums merge edge sequences in linear time;
/// higher dimensions take the hull of all vertex sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    let points = minkowski_vertices(&p.vertex_configuration(), &q.vertex_configuration())?;
    convex_hull(&points)
}

/// Vertices of `conv(A) + conv(B)` as a configuration.
pub fn minkowski_vertices(a: &PointConfiguration, b: &PointConfiguration) -> Result<PointConfiguration> {
    if a.dim != b.dim {
        return Err(Error::Dimension(format!(
            "Minkowski sum of configurations in Z^{} and Z^{}",
            a.dim, b.dim
        )));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidInput("Minkowski sum with an empty configuration".into()));
    }
    if a.dim == 2 {
        let ha = hull2d::hull(&a.planar());
        let hb = hull2d::hull(&b.planar());
        let sum = hull2d::minkowski(&ha, &hb)
            .ok_or_else(|| Error::Range("Minkowski sum leaves the i64 range".into()))?;
        return Ok(PointConfiguration { dim: 2, points: sum.iter().map(|p| p.to_vec()).collect() });
    }
    let va = if a.len() > a.dim + 1 { convex_hull(a)?.vertices() } else { a.points.clone() };
    let vb = if b.len() > b.dim + 1 { convex_hull(b)?.vertices() } else { b.points.clone() };
    let mut sums = Vec::with_capacity(va.len() * vb.len());
    for x in &va {
        for y in &vb {
            let s: Option<Vec<i64>> = x.iter().zip(y).map(|(u, v)| u.checked_add(*v)).collect();
            sums.push(s.ok_or_else(|| Error::Range("Minkowski sum leaves the i64 range".into()))?);
        }
    }
    let all = PointConfiguration::dedup(a.dim, sums)?;
    Ok(convex_hull(&all)?.vertex_configuration())
}

/// Vertices of `conv(A_1) + ... + conv(A_k)`.
pub fn minkowski_vertices_many(configs: &[&PointConfiguration]) -> Result<PointConfiguration> {
    let (first, rest) = configs
        .split_first()
        .ok_or_else(|| Error::InvalidInput("Minkowski sum of nothing".into()))?;
    let mut acc = (*first).clone();
    for c in rest {
        acc = minkowski_vertices(&acc, c)?;
    }
    Ok(acc)
}

/// `n!` times the Euclidean volume of `conv(A)`; zero unless `A` is
/// full-dimensional.
pub fn normalized_volume(a: &PointConfiguration) -> Result<BigInt> {
    normalized_volume_seeded(a, DEFAULT_VOLUME_SEED)
}

/// [`normalized_volume`] with an explicit seed for the triangulating lift
/// used in dimension three and up. The value never depends on the seed.
pub fn normalized_volume_seeded(a: &PointConfiguration, seed: u64) -> Result<BigInt> {
    if a.dim > MAX_DIMENSION {
        return Err(Error::DimensionGuard { dim: a.dim, max: MAX_DIMENSION });
    }
    if a.is_empty() {
        return Ok(BigInt::zero());
    }
    match a.dim {
        0 => Ok(BigInt::from(1)),
        1 => {
            let (lo, hi) = min_max_index(a, 0);
            Ok(BigInt::from(a.points[hi][0] as i128 - a.points[lo][0] as i128))
        }
        2 => Ok(hull2d::double_area(&hull2d::hull(&a.planar()))),
        _ => {
            if a.affine_dimension() != Some(a.dim) {
                return Ok(BigInt::zero());
            }
            let vertices = convex_hull(a)?.vertex_configuration();
            let triangulation = crate::subdivision::triangulate(&vertices, seed)?;
            Ok(triangulation.iter().map(|simplex| simplex_volume(&vertices, simplex)).sum())
        }
    }
}

/// `|det|` of the edge matrix of a full-dimensional simplex.
pub(crate) fn simplex_volume(a: &PointConfiguration, simplex: &[usize]) -> BigInt {
    let base = &a.points[simplex[0]];
    let edges: Vec<Vec<i64>> = simplex[1..]
        .iter()
        .map(|&i| a.points[i].iter().zip(base).map(|(x, y)| x - y).collect())
        .collect();
    det_i64(&edges).abs()
}

pub(crate) fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    fn go<T: arith::Ring>(rows: &[Vec<i64>]) -> Option<BigInt> {
        arith::det(rows.iter().map(|r| arith::lift_vec::<T>(r)).collect()).map(|d| d.to_bigint())
    }
    exact!(go(rows))
}

/// Euclidean volume of `conv(A)` as an exact rational.
pub fn euclidean_volume(a: &PointConfiguration) -> Result<BigRational> {
    let v = normalized_volume(a)?;
    Ok(BigRational::new(v, arith::factorial(a.dim)))
}

/// Support and Newton polytope of a polynomial.
pub fn newton_data(f: &Polynomial) -> Result<(PointConfiguration, LatticePolytope)> {
    let support = f.support()?;
    let polytope = convex_hull(&support)?;
    Ok((support, polytope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Polynomial;

    fn pentagon() -> PointConfiguration {
        PointConfiguration::from_rows(&[[0, 0], [2, 0], [0, 1], [7, 5], [6, 7]])
    }

    fn unit_simplex(n: usize) -> PointConfiguration {
        let mut pts = vec![vec![0; n]];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
        PointConfiguration::new(n, pts).unwrap()
    }

    fn intro_support() -> PointConfiguration {
        // The intro lists x^6 y^7 x^5, read here as x^6 y^7 z^5.
        PointConfiguration::from_rows(&[
            [0, 0, 0],
            [1, 0, 0],
            [0, 2, 0],
            [0, 0, 3],
            [5, 6, 7],
            [6, 7, 5],
            [7, 5, 6],
            [8, 9, 9],
            [10, 9, 9],
            [9, 8, 9],
            [9, 10, 9],
            [9, 9, 10],
        ])
    }

    #[test]
    fn pentagon_hull() {
        let h = convex_hull(&pentagon()).unwrap();
        assert_eq!(h.vertices(), vec![vec![0, 0], vec![2, 0], vec![7, 5], vec![6, 7], vec![0, 1]]);
        assert_eq!(h.facets().len(), 5);
        for f in h.facets() {
            for p in pentagon().points() {
                assert!(f.value(p) >= f.offset);
            }
        }
    }

    #[test]
    fn simplex_hulls() {
        for n in 1..=5 {
            let s = unit_simplex(n);
            let h = convex_hull(&s).unwrap();
            assert_eq!(h.vertices().len(), n + 1);
            assert_eq!(h.facets().len(), n + 1);
            assert_eq!(normalized_volume(&s).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn collinear_hull() {
        let a = PointConfiguration::from_rows(&[[0, 0], [1, 1], [2, 2]]);
        let h = convex_hull(&a).unwrap();
        assert_eq!(h.affine_dimension(), 1);
        assert_eq!(h.vertices(), vec![vec![0, 0], vec![2, 2]]);
        let b = PointConfiguration::from_rows(&[[1, 1, 1], [0, 0, 0], [2, 2, 2], [3, 3, 3]]);
        let hb = convex_hull(&b).unwrap();
        assert_eq!(hb.affine_dimension(), 1);
        assert_eq!(hb.vertices(), vec![vec![0, 0, 0], vec![3, 3, 3]]);
        assert_eq!(normalized_volume(&b).unwrap(), BigInt::zero());
    }

    #[test]
    fn flat_configuration_in_space() {
        let a = PointConfiguration::from_rows(&[[0, 0, 5], [3, 0, 5], [0, 3, 5], [1, 1, 5]]);
        let h = convex_hull(&a).unwrap();
        assert_eq!(h.affine_dimension(), 2);
        assert_eq!(h.vertices().len(), 3);
        for f in h.facets() {
            for p in a.points() {
                assert!(f.value(p) >= f.offset);
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let a = PointConfiguration::new(9, vec![vec![0; 9]]).unwrap();
        assert_eq!(convex_hull(&a), Err(Error::DimensionGuard { dim: 9, max: 8 }));
    }

    #[test]
    fn faces() {
        let square = PointConfiguration::from_rows(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let f = face(&square, &[0, 1]).unwrap();
        assert_eq!(f.points.points(), &[vec![0, 0], vec![1, 0]]);
        assert_eq!(face(&square, &[0, 0]), Err(Error::ZeroNormal));
        let lifted =
            PointConfiguration::from_rows(&[[0, 0, 1], [2, 0, 0], [0, 1, 0], [7, 5, 0], [6, 7, 1]]);
        let f = face(&lifted, &[1, 2, 2]).unwrap();
        assert_eq!(f.points.points(), &[vec![0, 0, 1], vec![2, 0, 0], vec![0, 1, 0]]);
        let single = PointConfiguration::from_rows(&[[4, -2]]);
        assert_eq!(face(&single, &[-3, 1]).unwrap().points, single);
    }

    #[test]
    fn minkowski_examples() {
        let seg_x = convex_hull(&PointConfiguration::from_rows(&[[0, 0], [1, 0]])).unwrap();
        let seg_y = convex_hull(&PointConfiguration::from_rows(&[[0, 0], [0, 1]])).unwrap();
        let square = minkowski_sum(&seg_x, &seg_y).unwrap();
        assert_eq!(square.vertices(), vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]);

        let p = convex_hull(&pentagon()).unwrap();
        let v = convex_hull(&PointConfiguration::from_rows(&[[3, -4]])).unwrap();
        let moved = minkowski_sum(&p, &v).unwrap();
        let expected: Vec<Vec<i64>> =
            p.vertices().iter().map(|q| vec![q[0] + 3, q[1] - 4]).collect();
        assert_eq!(moved.vertices(), expected);

        let b1 = convex_hull(&PointConfiguration::from_rows(&[[0, 0], [2, 0], [0, 3], [2, 3]])).unwrap();
        let b2 = convex_hull(&PointConfiguration::from_rows(&[[0, 0], [5, 0], [0, 7], [5, 7]])).unwrap();
        let b = minkowski_sum(&b1, &b2).unwrap();
        assert_eq!(b.vertices(), vec![vec![0, 0], vec![7, 0], vec![7, 10], vec![0, 10]]);
    }

    #[test]
    fn minkowski_in_space_matches_brute_force() {
        let a = unit_simplex(3);
        let b = PointConfiguration::from_rows(&[[0, 0, 0], [2, 1, 0], [0, 0, 3]]);
        let fast = minkowski_vertices(&a, &b).unwrap();
        let mut all = Vec::new();
        for x in a.points() {
            for y in b.points() {
                all.push(x.iter().zip(y).map(|(u, v)| u + v).collect());
            }
        }
        let brute = convex_hull(&PointConfiguration::dedup(3, all).unwrap()).unwrap();
        assert_eq!(fast.points(), brute.vertices().as_slice());
    }

    #[test]
    fn volumes() {
        assert_eq!(normalized_volume(&pentagon()).unwrap(), BigInt::from(35));
        assert_eq!(
            euclidean_volume(&pentagon()).unwrap(),
            BigRational::new(35.into(), 2.into())
        );
        let square = PointConfiguration::from_rows(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        assert_eq!(euclidean_volume(&square).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(
            euclidean_volume(&unit_simplex(3)).unwrap(),
            BigRational::new(1.into(), 6.into())
        );
        let interval = PointConfiguration::from_rows(&[[3], [-4], [0]]);
        assert_eq!(normalized_volume(&interval).unwrap(), BigInt::from(7));
    }

    #[test]
    fn intro_support_volume() {
        let a = intro_support();
        assert_eq!(normalized_volume(&a).unwrap(), BigInt::from(321));
        assert_eq!(normalized_volume_seeded(&a, 12345).unwrap(), BigInt::from(321));
    }

    #[test]
    fn cube_volume() {
        let mut pts = Vec::new();
        for x in [0, 2] {
            for y in [0, 3] {
                for z in [0, 5] {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        pts.push(vec![1, 1, 1]);
        let cube = PointConfiguration::new(3, pts).unwrap();
        assert_eq!(normalized_volume(&cube).unwrap(), BigInt::from(6 * 30));
    }

    #[test]
    fn newton_polytopes() {
        let f = Polynomial::from_integer_terms(
            2,
            &[(&[0, 0], -2), (&[2, 0], 1), (&[0, 1], -3), (&[7, 5], 5), (&[6, 7], 4)],
        )
        .unwrap();
        let (support, polytope) = newton_data(&f).unwrap();
        let mut pts = support.points().to_vec();
        pts.sort();
        assert_eq!(pts, vec![vec![0, 0], vec![0, 1], vec![2, 0], vec![6, 7], vec![7, 5]]);
        assert_eq!(polytope.vertices().len(), 5);

        let c = Polynomial::from_integer_terms(2, &[(&[0, 0], 7)]).unwrap();
        let (s, p) = newton_data(&c).unwrap();
        assert_eq!(s.points(), &[vec![0, 0]]);
        assert_eq!(p.affine_dimension(), 0);

        let dropped = Polynomial::from_integer_terms(1, &[(&[1], 0), (&[0], 3)]).unwrap();
        assert_eq!(newton_data(&dropped).unwrap().0.points(), &[vec![0]]);

        let zero = Polynomial::from_integer_terms(1, &[(&[1], 0)]).unwrap();
        assert_eq!(newton_data(&zero).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn configuration_validation() {
        assert!(PointConfiguration::new(2, vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(PointConfiguration::new(2, vec![vec![0, 0, 1]]).is_err());
        assert_eq!(PointConfiguration::dedup(1, vec![vec![1], vec![1]]).unwrap().len(), 1);
    }
}

//! Mixed volumes of lattice polytopes.
//!
//! Normalization: `M(P_1, ..., P_n)` is the coefficient of `λ_1 ⋯ λ_n` in
//! the Euclidean volume of `λ_1 P_1 + ⋯ + λ_n P_n`. With this choice
//! `M(P, ..., P)` is the normalized volume of `P`, a mixed cell with edges
//! `e_1, ..., e_n` contributes `|det(e_1, ..., e_n)|`, and `M` counts the
//! roots of a generic sparse system in the torus.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::exact_linear::IntegerMatrix;
use crate::geometry::{self, hull2d, PointConfiguration, MAX_DIMENSION};
use crate::subdivision::{random_generic_lifting, SubdivisionCell};

/// Largest matrix accepted by [`permanent`].
pub const MAX_PERMANENT_SIZE: usize = 12;

/// Largest matrix accepted by [`cornered_spike_formula`].
pub const MAX_SPIKE_SIZE: usize = 8;

/// Seed for the generic lifting used when the caller supplies none.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// All inputs share a hull: the normalized volume.
    Unmixed,
    /// All inputs are segments: the determinant of their edge vectors.
    Segments,
    /// All inputs are axis-parallel boxes: the permanent of their widths.
    Bricks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    MixedCells,
    InclusionExclusion,
    PlanarStrips,
    ClosedForm(ClosedForm),
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::MixedCells => "mixed-cells",
            Method::InclusionExclusion => "inclusion-exclusion",
            Method::PlanarStrips => "planar-strips",
            Method::ClosedForm(ClosedForm::Unmixed) => "closed-form:unmixed",
            Method::ClosedForm(ClosedForm::Segments) => "closed-form:segments",
            Method::ClosedForm(ClosedForm::Bricks) => "closed-form:bricks",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Cells,
    InclusionExclusion,
    Planar,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "cells" => Ok(Strategy::Cells),
            "ie" => Ok(Strategy::InclusionExclusion),
            "planar" => Ok(Strategy::Planar),
            other => Err(Error::Parse(format!("unknown method {other:?}; expected auto, cells, ie or planar"))),
        }
    }
}

/// What a certificate entry accounts for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateItem {
    /// A mixed cell of a fine mixed subdivision.
    Cell(SubdivisionCell),
    /// The strip of the edge `from -> to` of the first polygon, measured
    /// against the vertex `vertex` of the second that minimizes the edge's
    /// inner normal.
    Strip { from: [i64; 2], to: [i64; 2], vertex: [i64; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEntry {
    pub item: CertificateItem,
    pub contribution: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedVolumeResult {
    pub value: BigInt,
    pub method: Method,
    /// Present for the mixed-cell and strip methods; contributions sum to
    /// `value`.
    pub certificate: Option<Vec<CertificateEntry>>,
}

fn check_family(configs: &[PointConfiguration]) -> Result<usize> {
    let n = configs.len();
    if n == 0 {
        return Err(Error::InvalidInput("mixed volume of no polytopes".into()));
    }
    if n > MAX_DIMENSION {
        return Err(Error::DimensionGuard { dim: n, max: MAX_DIMENSION });
    }
    if let Some(c) = configs.iter().find(|c| c.dim() != n) {
        return Err(Error::Dimension(format!(
            "{n} configurations must live in Z^{n}, found one in Z^{}",
            c.dim()
        )));
    }
    if configs.iter().any(PointConfiguration::is_empty) {
        return Err(Error::InvalidInput("empty configuration".into()));
    }
    Ok(n)
}

fn vertex_configurations(configs: &[PointConfiguration]) -> Result<Vec<PointConfiguration>> {
    configs.iter().map(|c| Ok(geometry::convex_hull(c)?.vertex_configuration())).collect()
}

/// Mixed volume as the sum of `|det|` over the mixed cells of a certified
/// fine mixed subdivision induced by a seeded random lifting.
pub fn mixed_volume_cells(configs: &[PointConfiguration], seed: u64) -> Result<MixedVolumeResult> {
    check_family(configs)?;
    let vertices = vertex_configurations(configs)?;
    let sub = random_generic_lifting(&vertices, seed, None)?;
    let mut value = BigInt::zero();
    let mut certificate = Vec::new();
    for cell in sub.mixed_cells() {
        let contribution = cell.mixed_contribution().expect("mixed cell of a square family");
        value += &contribution;
        certificate.push(CertificateEntry { item: CertificateItem::Cell(cell.clone()), contribution });
    }
    Ok(MixedVolumeResult { value, method: Method::MixedCells, certificate: Some(certificate) })
}

/// Mixed volume by inclusion-exclusion over Euclidean volumes:
/// `Σ_{∅≠I} (-1)^{n-|I|} vol(Σ_{i∈I} P_i)`.
pub fn mixed_volume_ie(configs: &[PointConfiguration]) -> Result<MixedVolumeResult> {
    let n = check_family(configs)?;
    let vertices = vertex_configurations(configs)?;
    let full = 1usize << n;
    let mut sums: Vec<Option<PointConfiguration>> = vec![None; full];
    let mut total = BigRational::zero();
    let n_fact = arith::factorial(n);
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let sum = match &sums[rest] {
            None => vertices[low].clone(),
            Some(s) => geometry::minkowski_vertices(s, &vertices[low])?,
        };
        let vol = BigRational::new(geometry::normalized_volume(&sum)?, n_fact.clone());
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
        sums[mask] = Some(sum);
    }
    if !total.is_integer() {
        return Err(Error::Internal(format!("inclusion-exclusion produced the non-integer {total}")));
    }
    Ok(MixedVolumeResult { value: total.to_integer(), method: Method::InclusionExclusion, certificate: None })
}

/// Timings reported by [`mixed_area_fast_instrumented`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripStats {
    pub hull_time: Duration,
    pub strips: usize,
    pub total_time: Duration,
}

/// Mixed area of two planar configurations by the strip decomposition.
///
/// Take `v_2` the lexicographically largest vertex of `P_2`. For each edge
/// `e` of `P_1`, counter-clockwise, let `u` be a vertex of `P_2` minimizing
/// the inner normal of `e`; it is found by binary search over the
/// angle-sorted edges of `P_2`. The strip of `e` has area
/// `|det(e, u - v_2)|` and the strips together make up the mixed cells of
/// the subdivision whose unmixed cells are `P_1 + v_2` and `v_1 + P_2`.
/// Runs in `O(N log N)` for `N` input points.
pub fn mixed_area_fast(a1: &PointConfiguration, a2: &PointConfiguration) -> Result<MixedVolumeResult> {
    strips(a1, a2, true).map(|(r, _)| r)
}

/// [`mixed_area_fast`] without a certificate, reporting timings to `report`.
pub fn mixed_area_fast_instrumented(
    a1: &PointConfiguration,
    a2: &PointConfiguration,
    report: impl FnOnce(&StripStats),
) -> Result<MixedVolumeResult> {
    let (r, stats) = strips(a1, a2, false)?;
    report(&stats);
    Ok(r)
}

fn strips(a1: &PointConfiguration, a2: &PointConfiguration, certify: bool) -> Result<(MixedVolumeResult, StripStats)> {
    if a1.dim() != 2 || a2.dim() != 2 {
        return Err(Error::Dimension("the strip method needs two planar configurations".into()));
    }
    if a1.is_empty() || a2.is_empty() {
        return Err(Error::InvalidInput("empty configuration".into()));
    }
    let start = Instant::now();
    let h1 = hull2d::hull(&a1.planar());
    let h2 = hull2d::hull(&a2.planar());
    let hull_time = start.elapsed();

    let e1 = hull2d::edges(&h1);
    let e2 = hull2d::edges(&h2);
    let v2 = *h2.iter().max().expect("nonempty hull");
    // Exact sum kept in i128 until it overflows.
    let mut small: i128 = 0;
    let mut value = BigInt::zero();
    let mut certificate = Vec::new();
    if !e2.is_empty() {
        for (i, &e) in e1.iter().enumerate() {
            let j = e2.partition_point(|&f| hull2d::angle_cmp(f, e) == std::cmp::Ordering::Less);
            let u = h2[j % h2.len()];
            let d = [u[0] as i128 - v2[0] as i128, u[1] as i128 - v2[1] as i128];
            let fast = hull2d::cross_i128(e, d).and_then(i128::checked_abs);
            match fast.and_then(|c| small.checked_add(c)) {
                Some(s) => small = s,
                None => value += hull2d::cross_exact(e, d).abs(),
            }
            if certify {
                let contribution = fast.map_or_else(|| hull2d::cross_exact(e, d).abs(), BigInt::from);
                certificate.push(CertificateEntry {
                    item: CertificateItem::Strip { from: h1[i], to: h1[(i + 1) % h1.len()], vertex: u },
                    contribution,
                });
            }
        }
    }
    value += small;
    let stats = StripStats { hull_time, strips: e1.len(), total_time: start.elapsed() };
    let result = MixedVolumeResult {
        value,
        method: Method::PlanarStrips,
        certificate: if certify { Some(certificate) } else { None },
    };
    Ok((result, stats))
}

/// Mixed volume with the requested strategy.
///
/// `Auto` first tries the closed forms (shared hull, segments, axis boxes),
/// then the strip method in the plane, then mixed cells.
pub fn mixed_volume(configs: &[PointConfiguration], strategy: Strategy, seed: u64) -> Result<MixedVolumeResult> {
    let n = check_family(configs)?;
    match strategy {
        Strategy::Cells => mixed_volume_cells(configs, seed),
        Strategy::InclusionExclusion => mixed_volume_ie(configs),
        Strategy::Planar => {
            if n != 2 {
                return Err(Error::Dimension(format!("the strip method is planar, got dimension {n}")));
            }
            mixed_area_fast(&configs[0], &configs[1])
        }
        Strategy::Auto => {
            if let Some(r) = closed_form(configs)? {
                return Ok(r);
            }
            if n == 2 {
                mixed_area_fast(&configs[0], &configs[1])
            } else {
                mixed_volume_cells(configs, seed)
            }
        }
    }
}

fn closed_form(configs: &[PointConfiguration]) -> Result<Option<MixedVolumeResult>> {
    let hulls: Vec<BTreeSet<Vec<i64>>> = configs
        .iter()
        .map(|c| Ok(geometry::convex_hull(c)?.vertices().into_iter().collect()))
        .collect::<Result<_>>()?;
    let result = |value, form| Some(MixedVolumeResult { value, method: Method::ClosedForm(form), certificate: None });
    if hulls.iter().all(|h| *h == hulls[0]) {
        let v = geometry::normalized_volume(&configs[0])?;
        return Ok(result(v, ClosedForm::Unmixed));
    }
    if hulls.iter().all(|h| h.len() == 2) {
        let edges: Vec<Vec<i64>> = hulls
            .iter()
            .map(|h| {
                let (p, q) = (h.first().expect("two"), h.last().expect("two"));
                q.iter().zip(p).map(|(a, b)| a - b).collect()
            })
            .collect();
        return Ok(result(geometry::det_i64(&edges).abs(), ClosedForm::Segments));
    }
    let widths: Option<Vec<Vec<i64>>> = hulls.iter().map(box_widths).collect();
    if let Some(widths) = widths {
        let d = IntegerMatrix::from_rows(&widths);
        return Ok(result(permanent(&d)?, ClosedForm::Bricks));
    }
    Ok(None)
}

/// Side lengths if the vertex set is exactly the corner set of an
/// axis-parallel box.
fn box_widths(vertices: &BTreeSet<Vec<i64>>) -> Option<Vec<i64>> {
    let first = vertices.first()?;
    let n = first.len();
    let lo: Vec<i64> = (0..n).map(|k| vertices.iter().map(|v| v[k]).min().expect("nonempty")).collect();
    let hi: Vec<i64> = (0..n).map(|k| vertices.iter().map(|v| v[k]).max().expect("nonempty")).collect();
    let mut corners: BTreeSet<Vec<i64>> = BTreeSet::new();
    corners.insert(Vec::new());
    for k in 0..n {
        corners = corners
            .into_iter()
            .flat_map(|c| {
                [lo[k], hi[k]].into_iter().map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    (corners == *vertices).then(|| hi.iter().zip(&lo).map(|(h, l)| h - l).collect())
}

/// Permanent by Ryser's formula, for square matrices up to
/// [`MAX_PERMANENT_SIZE`].
pub fn permanent(d: &IntegerMatrix) -> Result<BigInt> {
    if !d.is_square() {
        return Err(Error::Dimension(format!("permanent of a {}x{} matrix", d.rows(), d.cols())));
    }
    let n = d.rows();
    if n > MAX_PERMANENT_SIZE {
        return Err(Error::SizeGuard { size: n, max: MAX_PERMANENT_SIZE });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut total = BigInt::zero();
    for mask in 1u32..(1 << n) {
        let mut prod = BigInt::one();
        for i in 0..n {
            let row_sum: BigInt = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| d.get(i, j)).sum();
            prod *= row_sum;
            if prod.is_zero() {
                break;
            }
        }
        if (n - mask.count_ones() as usize) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

/// `max_σ Π_i a_{iσ(i)}` over all permutations, for nonnegative square
/// matrices up to [`MAX_SPIKE_SIZE`].
pub fn cornered_spike_formula(a: &IntegerMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("spike matrix is {}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    if n > MAX_SPIKE_SIZE {
        return Err(Error::SizeGuard { size: n, max: MAX_SPIKE_SIZE });
    }
    if a.entries().iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput("spike lengths must be nonnegative".into()));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = BigInt::zero();
    loop {
        let prod: BigInt = (0..n).map(|i| a.get(i, perm[i]).clone()).product();
        best = best.max(prod);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    if n == 0 {
        best = BigInt::one();
    }
    Ok(best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The configurations `{O, a_{i1} e_1, ..., a_{in} e_n}`, one per row.
pub fn spike_configurations(a: &IntegerMatrix) -> Result<Vec<PointConfiguration>> {
    let n = a.rows();
    (0..n)
        .map(|i| {
            let mut pts = vec![vec![0i64; n]];
            for j in 0..a.cols() {
                let mut p = vec![0i64; n];
                p[j] = a
                    .get(i, j)
                    .to_i64()
                    .ok_or_else(|| Error::Range("spike length exceeds i64".into()))?;
                pts.push(p);
            }
            PointConfiguration::dedup(n, pts)
        })
        .collect()
}

/// Coefficients `c_1, ..., c_n` with
/// `m(x_1, ..., x_n) = Σ_{∅≠I} c_{|I|} m(Σ_I x_i, ..., Σ_I x_i)` for every
/// symmetric multilinear `m`, found by expanding the right-hand side over all
/// words in `{1..n}^n` and solving for the coefficients exactly.
pub fn polarization_coefficients(n: usize) -> Vec<BigRational> {
    assert!((1..=6).contains(&n), "polarization expansion is exponential; n in 1..=6");
    // Row per multiset of size n (as a sorted word), column per subset size.
    let mut rows: Vec<(Vec<usize>, Vec<BigRational>)> = Vec::new();
    let mut index: std::collections::HashMap<Vec<usize>, usize> = std::collections::HashMap::new();
    for mask in 1u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let k = members.len();
        let words = members.len().pow(n as u32);
        for w in 0..words {
            let mut word: Vec<usize> = Vec::with_capacity(n);
            let mut x = w;
            for _ in 0..n {
                word.push(members[x % k]);
                x /= k;
            }
            word.sort_unstable();
            let r = *index.entry(word.clone()).or_insert_with(|| {
                rows.push((word, vec![BigRational::zero(); n]));
                rows.len() - 1
            });
            rows[r].1[k - 1] += BigRational::one();
        }
    }
    let target: Vec<usize> = (0..n).collect();
    let system: Vec<(Vec<BigRational>, BigRational)> = rows
        .into_iter()
        .map(|(word, coeffs)| {
            let rhs = if word == target { BigRational::one() } else { BigRational::zero() };
            (coeffs, rhs)
        })
        .collect();
    solve_consistent(system, n)
}

/// Solves an overdetermined but consistent rational system with a unique
/// solution by Gauss-Jordan elimination.
fn solve_consistent(mut rows: Vec<(Vec<BigRational>, BigRational)>, n: usize) -> Vec<BigRational> {
    let mut r = 0;
    for c in 0..n {
        let p = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()).expect("unique solution");
        rows.swap(r, p);
        let pivot = rows[r].0[c].clone();
        for x in rows[r].0.iter_mut() {
            *x /= &pivot;
        }
        rows[r].1 /= &pivot;
        let (pivot_row, pivot_rhs) = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row.0[c].is_zero() {
                let f = row.0[c].clone();
                for (x, y) in row.0.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                row.1 -= &f * &pivot_rhs;
            }
        }
        r += 1;
    }
    debug_assert!(rows[r..].iter().all(|(_, rhs)| rhs.is_zero()), "inconsistent system");
    rows[..n].iter().map(|(_, rhs)| rhs.clone()).collect()
}

/// The coefficients `(-1)^{n-k} C(n, k)` of the identity as it is sometimes
/// displayed. They are wrong for `n >= 2`; kept so the discrepancy can be
/// demonstrated.
pub fn binomial_polarization_coefficients(n: usize) -> Vec<BigRational> {
    (1..=n)
        .map(|k| {
            let c = binomial(n, k);
            BigRational::from_integer(if (n - k) % 2 == 0 { c } else { -c })
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    arith::factorial(n) / (arith::factorial(k) * arith::factorial(n - k))
}

/// `Σ_{∅≠I} c_{|I|} Vol(Σ_{i∈I} A_i)`, evaluating a polarization identity on
/// unmixed mixed volumes.
pub fn polarized_mixed_volume(configs: &[PointConfiguration], coefficients: &[BigRational]) -> Result<BigRational> {
    let n = check_family(configs)?;
    if coefficients.len() != n {
        return Err(Error::Dimension(format!("{} coefficients for {n} polytopes", coefficients.len())));
    }
    let vertices = vertex_configurations(configs)?;
    let mut sums: Vec<Option<PointConfiguration>> = vec![None; 1 << n];
    let mut total = BigRational::zero();
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let sum = match &sums[mask & (mask - 1)] {
            None => vertices[low].clone(),
            Some(s) => geometry::minkowski_vertices(s, &vertices[low])?,
        };
        let vol = geometry::normalized_volume(&sum)?;
        total += &coefficients[mask.count_ones() as usize - 1] * BigRational::from_integer(vol);
        sums[mask] = Some(sum);
    }
    Ok(total)
}

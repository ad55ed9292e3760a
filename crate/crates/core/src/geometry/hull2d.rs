//! Planar hulls, edge sequences and Minkowski sums on `[i64; 2]` points.

use std::cmp::Ordering;

use num_bigint::BigInt;

pub(crate) type P2 = [i64; 2];

/// Sign of `(b - a) x (c - a)`. Positive for a counter-clockwise turn.
pub(crate) fn orient(a: P2, b: P2, c: P2) -> Ordering {
    cross_diff(a, b, a, c)
}

/// Sign of `(b - a) x (d - c)`.
fn cross_diff(a: P2, b: P2, c: P2, d: P2) -> Ordering {
    let u = [b[0] as i128 - a[0] as i128, b[1] as i128 - a[1] as i128];
    let v = [d[0] as i128 - c[0] as i128, d[1] as i128 - c[1] as i128];
    cross_sign(u, v)
}

pub(crate) fn cross_sign(u: [i128; 2], v: [i128; 2]) -> Ordering {
    match (u[0].checked_mul(v[1]), u[1].checked_mul(v[0])) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => (BigInt::from(u[0]) * v[1]).cmp(&(BigInt::from(u[1]) * v[0])),
    }
}

/// `u x v` when it fits in `i128`.
pub(crate) fn cross_i128(u: [i128; 2], v: [i128; 2]) -> Option<i128> {
    u[0].checked_mul(v[1])?.checked_sub(u[1].checked_mul(v[0])?)
}

/// `u x v` as an exact integer.
pub(crate) fn cross_exact(u: [i128; 2], v: [i128; 2]) -> BigInt {
    match (u[0].checked_mul(v[1]), u[1].checked_mul(v[0])) {
        (Some(x), Some(y)) => match x.checked_sub(y) {
            Some(d) => BigInt::from(d),
            None => BigInt::from(x) - BigInt::from(y),
        },
        _ => BigInt::from(u[0]) * v[1] - BigInt::from(u[1]) * v[0],
    }
}

/// Convex hull by Andrew's monotone chain.
///
/// Returns the strict vertices counter-clockwise starting from the
/// lexicographically smallest one. Collinear inputs give their two
/// endpoints and a single point gives itself.
pub(crate) fn hull(points: &[P2]) -> Vec<P2> {
    let mut pts = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<P2> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2
            && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<P2> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.truncate(1);
    }
    lower
}

/// Edge vectors of a hull in counter-clockwise order; a segment `[a, b]`
/// yields `b - a` and `a - b`, a point yields nothing.
pub(crate) fn edges(vertices: &[P2]) -> Vec<[i128; 2]> {
    if vertices.len() < 2 {
        return Vec::new();
    }
    (0..vertices.len())
        .map(|i| {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            [b[0] as i128 - a[0] as i128, b[1] as i128 - a[1] as i128]
        })
        .collect()
}

/// Total order on nonzero directions by angle, starting just after the
/// downward direction. Edges of a hull listed from its lexicographic
/// minimum are sorted in this order.
pub(crate) fn angle_cmp(u: [i128; 2], v: [i128; 2]) -> Ordering {
    let half = |w: [i128; 2]| u8::from(!(w[0] > 0 || (w[0] == 0 && w[1] > 0)));
    half(u).cmp(&half(v)).then_with(|| cross_sign(v, u))
}

/// Twice the Euclidean area of a counter-clockwise polygon.
pub(crate) fn double_area(vertices: &[P2]) -> BigInt {
    if vertices.len() < 3 {
        return BigInt::from(0);
    }
    let o = vertices[0];
    let mut total = BigInt::from(0);
    for w in vertices[1..].windows(2) {
        let u = [w[0][0] as i128 - o[0] as i128, w[0][1] as i128 - o[1] as i128];
        let v = [w[1][0] as i128 - o[0] as i128, w[1][1] as i128 - o[1] as i128];
        total += cross_exact(u, v);
    }
    total
}

/// Minkowski sum of two hulls by merging their edge sequences.
///
/// Both inputs must be in the canonical order produced by [`hull`]. Returns
/// `None` if a coordinate leaves the `i64` range.
pub(crate) fn minkowski(p: &[P2], q: &[P2]) -> Option<Vec<P2>> {
    let ep = edges(p);
    let eq = edges(q);
    let start = [p[0][0].checked_add(q[0][0])?, p[0][1].checked_add(q[0][1])?];
    let mut merged: Vec<[i128; 2]> = Vec::with_capacity(ep.len() + eq.len());
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        let next = if j == eq.len() {
            i += 1;
            ep[i - 1]
        } else if i == ep.len() {
            j += 1;
            eq[j - 1]
        } else {
            match angle_cmp(ep[i], eq[j]) {
                Ordering::Less => {
                    i += 1;
                    ep[i - 1]
                }
                Ordering::Greater => {
                    j += 1;
                    eq[j - 1]
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    [ep[i - 1][0] + eq[j - 1][0], ep[i - 1][1] + eq[j - 1][1]]
                }
            }
        };
        // Keep the output vertices strict.
        match merged.last_mut() {
            Some(last) if angle_cmp(*last, next) == Ordering::Equal => {
                last[0] += next[0];
                last[1] += next[1];
            }
            _ => merged.push(next),
        }
    }
    let mut out = vec![start];
    let mut cur = [start[0] as i128, start[1] as i128];
    for e in merged.iter().take(merged.len().saturating_sub(1)) {
        cur = [cur[0] + e[0], cur[1] + e[1]];
        out.push([i64::try_from(cur[0]).ok()?, i64::try_from(cur[1]).ok()?]);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagon_hull_is_counter_clockwise_from_lexmin() {
        let pts = [[0, 0], [2, 0], [0, 1], [7, 5], [6, 7]];
        assert_eq!(hull(&pts), vec![[0, 0], [2, 0], [7, 5], [6, 7], [0, 1]]);
        assert_eq!(double_area(&hull(&pts)), BigInt::from(35));
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(hull(&[[3, 3]]), vec![[3, 3]]);
        assert_eq!(hull(&[[2, 2], [0, 0], [1, 1]]), vec![[0, 0], [2, 2]]);
        assert_eq!(hull(&[[1, 1], [1, 1]]), vec![[1, 1]]);
        assert_eq!(edges(&[[0, 0], [2, 2]]), vec![[2, 2], [-2, -2]]);
    }

    #[test]
    fn hull_edges_are_angle_sorted() {
        let h = hull(&[[0, 0], [1, -3], [4, 0], [3, 3], [0, 5], [-1, 2], [-1, 0]]);
        let e = edges(&h);
        for w in e.windows(2) {
            assert_eq!(angle_cmp(w[0], w[1]), Ordering::Less, "{h:?}");
        }
    }

    #[test]
    fn minkowski_of_boxes() {
        let a = hull(&[[0, 0], [2, 0], [0, 3], [2, 3]]);
        let b = hull(&[[0, 0], [5, 0], [0, 7], [5, 7]]);
        assert_eq!(minkowski(&a, &b).unwrap(), vec![[0, 0], [7, 0], [7, 10], [0, 10]]);
    }

    #[test]
    fn minkowski_with_points_and_segments() {
        let p = hull(&[[0, 0], [2, 0], [0, 1], [7, 5], [6, 7]]);
        let shifted = minkowski(&p, &[[1, -1]]).unwrap();
        assert_eq!(shifted, vec![[1, -1], [3, -1], [8, 4], [7, 6], [1, 0]]);
        let square = minkowski(&[[0, 0], [1, 0]], &[[0, 0], [0, 1]]).unwrap();
        assert_eq!(square, vec![[0, 0], [1, 0], [1, 1], [0, 1]]);
        let long = minkowski(&[[0, 0], [1, 1]], &[[0, 0], [2, 2]]).unwrap();
        assert_eq!(long, vec![[0, 0], [3, 3]]);
    }

    #[test]
    fn extreme_coordinates_stay_exact() {
        let m = i64::MAX;
        let pts = [[-m, -m], [m, -m], [m, m], [-m, m], [0, 0]];
        let h = hull(&pts);
        assert_eq!(h.len(), 4);
        assert_eq!(double_area(&h), BigInt::from(2 * m as i128) * BigInt::from(2 * m as i128) * 2);
    }
}

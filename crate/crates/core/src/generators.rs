//! Seeded random inputs for tests, benchmarks and the CLI.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::PointConfiguration;

/// Between 1 and `max_points` distinct points with coordinates in
/// `[-bound, bound]`.
pub fn random_configuration<R: Rng>(rng: &mut R, dim: usize, max_points: usize, bound: i64) -> PointConfiguration {
    let target = rng.gen_range(1..=max_points.max(1));
    let mut pts: Vec<Vec<i64>> = Vec::with_capacity(target);
    while pts.len() < target {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(-bound..=bound)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfiguration::new(dim, pts).expect("distinct bounded points")
}

/// A strictly convex lattice polygon with exactly `vertices` vertices,
/// listed in random order.
///
/// Built as a centrally symmetric polygon from distinct primitive edge
/// directions sorted by angle; for odd counts one vertex is dropped.
pub fn random_convex_polygon(vertices: usize, seed: u64) -> PointConfiguration {
    assert!(vertices >= 3, "a polygon needs at least three vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = vertices.div_ceil(2);
    let mut radius: i64 = 2;
    let mut dirs = loop {
        let candidates = upper_primitive_directions(radius);
        if candidates.len() >= 2 * half {
            break candidates;
        }
        radius *= 2;
    };
    dirs.shuffle(&mut rng);
    dirs.truncate(half);
    // Directions in the half-plane y > 0 or (y = 0, x > 0) sort by angle
    // through the cross product.
    dirs.sort_by(|a, b| (b[0] as i128 * a[1] as i128).cmp(&(a[0] as i128 * b[1] as i128)));
    let edges = dirs.iter().copied().chain(dirs.iter().map(|d| [-d[0], -d[1]]));
    let mut cur = [0i64, 0i64];
    let mut pts = Vec::with_capacity(2 * half);
    for e in edges {
        pts.push(vec![cur[0], cur[1]]);
        cur = [cur[0] + e[0], cur[1] + e[1]];
    }
    if vertices % 2 == 1 {
        pts.pop();
    }
    pts.shuffle(&mut rng);
    PointConfiguration::new(2, pts).expect("distinct vertices")
}

fn upper_primitive_directions(r: i64) -> Vec<[i64; 2]> {
    let mut out = Vec::new();
    for y in 0..=r {
        for x in -r..=r {
            let upper = y > 0 || x > 0;
            if upper && x.gcd(&y) == 1 {
                out.push([x, y]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::convex_hull;

    #[test]
    fn polygons_have_requested_vertex_count() {
        for (n, seed) in [(3, 1), (4, 2), (7, 3), (100, 4), (1001, 5)] {
            let p = random_convex_polygon(n, seed);
            assert_eq!(p.len(), n);
            assert_eq!(convex_hull(&p).unwrap().vertex_indices().len(), n);
        }
        assert_eq!(random_convex_polygon(50, 9), random_convex_polygon(50, 9));
    }

    #[test]
    fn configurations_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let a = random_configuration(&mut rng, 3, 6, 4);
            assert!((1..=6).contains(&a.len()));
            assert!(a.points().iter().flatten().all(|c| c.abs() <= 4));
        }
    }
}

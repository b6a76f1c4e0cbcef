use num_bigint::BigUint;

use super::constants::binomial;
use super::dp::count_simple_poly;
use super::CountError;
use crate::geometry::{lens_chain_between, Point, PolygonWithHoles};

/// Build the closed lens polygon: chord endpoints `u, v` plus `k` lens
/// vertices forming a sagging valley between them. Every lens vertex sees
/// both chord endpoints and nothing else beyond its chain neighbors, so the
/// polygon has exactly `k` triangulations.
pub fn lens_polygon(k: usize) -> Result<PolygonWithHoles, CountError> {
    assert!(k >= 1);
    let mut half = 4 * (k as i64 + 1) * (k as i64 + 1) + 16;
    for _ in 0..24 {
        let u = Point::new(0, half);
        let v = Point::new(0, -half);
        if let Ok(lens) = lens_chain_between(u, v, k, (1, 0)) {
            let mut cycle = vec![u];
            cycle.extend(lens.iter().copied());
            cycle.push(v);
            if let Ok(poly) = PolygonWithHoles::simple(cycle) {
                if lens_fan_property(&poly, k) {
                    return Ok(poly);
                }
            }
        }
        half *= 2;
    }
    Err(CountError::Internal(format!(
        "lens polygon construction failed for k = {k}"
    )))
}

/// The defining property behind the lens count: each lens vertex sees both
/// chord endpoints, and no two non-adjacent lens vertices see each other.
fn lens_fan_property(poly: &PolygonWithHoles, k: usize) -> bool {
    // After orientation normalization the cycle may be reversed; locate the
    // chord endpoints as the two vertices with x == 0.
    let n = poly.num_vertices();
    let chord: Vec<usize> = (0..n).filter(|&i| poly.vertex(i).x == 0).collect();
    if chord.len() != 2 || n != k + 2 {
        return false;
    }
    for i in 0..n {
        if chord.contains(&i) {
            continue;
        }
        for &c in &chord {
            if !poly.visible(i, c) {
                return false;
            }
        }
        for j in (i + 1)..n {
            if chord.contains(&j) {
                continue;
            }
            let adjacent = poly.next(i) == j || poly.next(j) == i;
            if !adjacent && poly.visible(i, j) {
                return false;
            }
        }
    }
    true
}

/// Exact triangulation count of a lens polygon.
pub fn count_lens(poly: &PolygonWithHoles) -> BigUint {
    count_simple_poly(poly)
}

/// The closed-form count for the hull of two lenses with `ell` total lens
/// vertices: the central binomial coefficient C(ell-2, (ell-2)/2).
pub fn two_lens_hull_count(ell: u64) -> Result<BigUint, CountError> {
    if ell < 4 || ell % 2 != 0 {
        return Err(CountError::BadR { n: ell, r: 0 });
    }
    Ok(binomial(ell - 2, (ell - 2) / 2))
}

/// Build the polygon bounded by two facing lens chains joined by two bridge
/// edges: `ell / 2` vertices per lens, concave sides facing each other. Its
/// triangulations use only lens-to-lens diagonals.
pub fn two_lens_hull_polygon(ell: usize) -> Result<PolygonWithHoles, CountError> {
    assert!(ell >= 4 && ell % 2 == 0);
    let k = ell / 2;
    let mut half = 4 * (k as i64 + 1) * (k as i64 + 1) + 16;
    for _ in 0..24 {
        let width = 8 * half;
        // Horns recede away from the shared interior; each lens bulges toward
        // the other, so same-lens chords exit the polygon.
        let left = lens_chain_between(Point::new(0, half), Point::new(0, -half), k, (-1, 0));
        let right = lens_chain_between(
            Point::new(width, -half),
            Point::new(width, half),
            k,
            (1, 0),
        );
        if let (Ok(left), Ok(right)) = (left, right) {
            let mut cycle = left;
            cycle.extend(right);
            if let Ok(poly) = PolygonWithHoles::simple(cycle) {
                if hull_visibility(&poly, k) {
                    return Ok(poly);
                }
            }
        }
        half *= 2;
    }
    Err(CountError::Internal(format!(
        "two-lens hull construction failed for ell = {ell}"
    )))
}

/// Cross-lens pairs all visible; same-lens pairs only when adjacent.
fn hull_visibility(poly: &PolygonWithHoles, k: usize) -> bool {
    let n = poly.num_vertices();
    if n != 2 * k {
        return false;
    }
    let mid = poly
        .outer()
        .iter()
        .map(|p| p.x)
        .fold((i64::MAX, i64::MIN), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let split = (mid.0 + mid.1) / 2;
    let side: Vec<bool> = (0..n).map(|i| poly.vertex(i).x < split).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let adjacent = poly.next(i) == j || poly.next(j) == i;
            let cross = side[i] != side[j];
            let vis = poly.visible(i, j);
            if cross && !vis {
                return false;
            }
            if !cross && !adjacent && vis {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate_bruteforce;

    #[test]
    fn lens_counts() {
        for k in [1usize, 2, 3, 5, 8] {
            let poly = lens_polygon(k).unwrap();
            assert_eq!(count_lens(&poly), BigUint::from(k as u64), "k = {k}");
        }
    }

    #[test]
    fn lens_polygon_vertex_count() {
        let poly = lens_polygon(5).unwrap();
        assert_eq!(poly.num_vertices(), 7);
    }

    #[test]
    fn two_lens_formula() {
        assert_eq!(two_lens_hull_count(4).unwrap(), BigUint::from(2u32));
        assert_eq!(two_lens_hull_count(6).unwrap(), BigUint::from(6u32));
        assert_eq!(two_lens_hull_count(10).unwrap(), BigUint::from(70u32));
    }

    #[test]
    fn two_lens_hull_matches_formula() {
        for ell in [4usize, 6, 8] {
            let poly = two_lens_hull_polygon(ell).unwrap();
            let c = count_simple_poly(&poly);
            assert_eq!(c, two_lens_hull_count(ell as u64).unwrap(), "ell = {ell}");
            let oracle = enumerate_bruteforce(&poly, false, 1 << 26);
            assert!(oracle.complete);
            assert_eq!(c, oracle.count, "oracle mismatch at ell = {ell}");
        }
    }
}

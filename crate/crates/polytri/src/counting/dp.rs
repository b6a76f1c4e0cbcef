use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::CountError;
use crate::geometry::{orient, CleanMatrix, Point, PolygonWithHoles};

/// Interval dynamic program over a cyclic vertex sequence.
///
/// `pts` walk the boundary counterclockwise (interior on the left).
/// `chord_ok(i, j)` must hold for every boundary edge and for every usable
/// interior chord between cycle positions; `tri_ok(i, k, j)` is an extra
/// per-triangle filter. Returns the number of triangulations of the region.
pub fn cycle_dp<F, G>(pts: &[Point], chord_ok: F, tri_ok: G) -> BigUint
where
    F: Fn(usize, usize) -> bool,
    G: Fn(usize, usize, usize) -> bool,
{
    let n = pts.len();
    if n < 3 {
        return BigUint::zero();
    }
    // f[i][j] = triangulation count of the region bounded by positions
    // i..j of the walk plus the chord (i, j); only j > i entries are used.
    let mut f = vec![vec![BigUint::zero(); n]; n];
    for i in 0..n - 1 {
        f[i][i + 1] = BigUint::one();
    }
    for gap in 2..n {
        for i in 0..n - gap {
            let j = i + gap;
            let mut acc = BigUint::zero();
            for k in (i + 1)..j {
                if orient(pts[i], pts[k], pts[j]) != 1 {
                    continue;
                }
                if !chord_ok(i, k) || !chord_ok(k, j) {
                    continue;
                }
                if !tri_ok(i, k, j) {
                    continue;
                }
                if f[i][k].is_zero() || f[k][j].is_zero() {
                    continue;
                }
                acc += &f[i][k] * &f[k][j];
            }
            f[i][j] = acc;
        }
    }
    std::mem::take(&mut f[0][n - 1])
}

/// Exact number of triangulations of a simple polygon, by the interval
/// dynamic program over the visibility structure.
pub fn count_simple(vertices: &[Point]) -> Result<BigUint, CountError> {
    let poly = PolygonWithHoles::simple(vertices.to_vec())
        .map_err(|e| CountError::NotSimple(e.to_string()))?;
    Ok(count_simple_poly(&poly))
}

/// As [`count_simple`], for an already validated simple polygon.
pub fn count_simple_poly(poly: &PolygonWithHoles) -> BigUint {
    assert_eq!(poly.num_holes(), 0, "count_simple requires a simple polygon");
    let vis = CleanMatrix::compute(poly);
    let pts = poly.outer();
    cycle_dp(pts, |i, j| vis.visible(i, j), |_, _, _| true)
}

/// Triangulation counts of a simple polygon restricted by lens membership:
/// returns `(total, with_lens_triangle)` where the second value counts only
/// triangulations containing at least one triangle whose three corners are
/// all lens vertices. Computed as total minus the count that avoids such
/// triangles.
pub fn alpha_beta(poly: &PolygonWithHoles, lens: &[bool]) -> Result<(BigUint, BigUint), CountError> {
    if poly.num_holes() != 0 {
        return Err(CountError::NotSimple("gadget polygon has holes".into()));
    }
    assert_eq!(lens.len(), poly.num_vertices());
    let vis = CleanMatrix::compute(poly);
    let pts = poly.outer();
    let total = cycle_dp(pts, |i, j| vis.visible(i, j), |_, _, _| true);
    let avoid = cycle_dp(
        pts,
        |i, j| vis.visible(i, j),
        |i, k, j| !(lens[i] && lens[k] && lens[j]),
    );
    let with = &total - &avoid;
    Ok((total, with))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::catalan;
    use crate::geometry::{convex_polygon, Point};

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn convex_quad_two() {
        let c = count_simple(&[pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]).unwrap();
        assert_eq!(c, BigUint::from(2u32));
    }

    #[test]
    fn convex_catalan() {
        for m in 3..=10usize {
            let poly = convex_polygon(m);
            let c = count_simple(&poly).unwrap();
            assert_eq!(c, catalan(m as u64 - 2), "m = {m}");
        }
    }

    #[test]
    fn sagging_roof_pentagon() {
        // Floor edge (0,0)-(10,0) with a sagging three-vertex roof. By hand:
        // the floor triangle's apex can be any roof vertex and the rest is
        // forced, so exactly 3 triangulations.
        let p = [pt(0, 0), pt(10, 0), pt(9, 3), pt(5, 2), pt(1, 3)];
        let c = count_simple(&p).unwrap();
        assert_eq!(c, BigUint::from(3u32));
    }

    #[test]
    fn notched_pentagon_single() {
        // Reflex notch at (2,1) leaves only the two fan diagonals.
        let p = [pt(0, 0), pt(4, 0), pt(4, 3), pt(2, 1), pt(0, 3)];
        let c = count_simple(&p).unwrap();
        assert_eq!(c, BigUint::from(1u32));
    }

    #[test]
    fn rejects_self_intersection() {
        let bow = [pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)];
        assert!(count_simple(&bow).is_err());
    }
}

use num_integer::Integer;

use super::point::Point;
use super::segment::orient;
use super::GeometryError;

/// A strictly convex polygonal chain: consecutive edge directions rotate in
/// one consistent strict direction, so all point triples share an orientation.
#[derive(Clone, Debug)]
pub struct ConvexChain {
    pub points: Vec<Point>,
    /// +1 if every triple turns left, -1 if every triple turns right.
    pub turn: i32,
}

impl ConvexChain {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Side length of the bounding square.
    pub fn grid_side(&self) -> i64 {
        let xs: Vec<i64> = self.points.iter().map(|p| p.x).collect();
        let ys: Vec<i64> = self.points.iter().map(|p| p.y).collect();
        let w = xs.iter().max().unwrap() - xs.iter().min().unwrap();
        let h = ys.iter().max().unwrap() - ys.iter().min().unwrap();
        w.max(h)
    }

    pub fn verify(&self) -> bool {
        if self.points.len() < 3 {
            return true;
        }
        self.points
            .windows(3)
            .all(|w| orient(w[0], w[1], w[2]) == self.turn)
    }
}

/// Primitive vectors (x, y) with 1 <= x <= m and |y| <= m, sorted by slope.
fn primitive_family(m: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for x in 1..=m {
        for y in -m..=m {
            if x.gcd(&y.abs()).max(y.abs().gcd(&x)) == 1 || (y == 0 && x == 1) {
                if x.gcd(&y.abs()) == 1 {
                    v.push((x, y));
                }
            }
        }
    }
    // Strictly increasing slope y/x; ties cannot occur among primitives.
    v.sort_by(|a, b| (a.1 as i128 * b.0 as i128).cmp(&(b.1 as i128 * a.0 as i128)));
    v
}

/// Deterministic strictly convex chain of `k` lattice points turning `turn`
/// (+1 left / -1 right), within a square grid of side O(k^{3/2}). Built from
/// slope-sorted primitive edge vectors and prefix sums.
pub fn convex_chain(k: usize, turn: i32) -> ConvexChain {
    assert!(turn == 1 || turn == -1);
    assert!(k >= 1);
    if k == 1 {
        return ConvexChain {
            points: vec![Point::new(0, 0)],
            turn,
        };
    }
    let need = k - 1;
    let mut m = 1i64;
    let edges: Vec<(i64, i64)> = loop {
        let fam = primitive_family(m);
        if fam.len() >= need {
            // Centered window around slope zero keeps the chain balanced.
            let zero = fam
                .iter()
                .position(|&(_, y)| y >= 0)
                .unwrap_or(fam.len() / 2);
            let lo = zero.saturating_sub(need / 2).min(fam.len() - need);
            break fam[lo..lo + need].to_vec();
        }
        m += 1;
    };
    let mut points = Vec::with_capacity(k);
    let mut cur = Point::new(0, 0);
    points.push(cur);
    for &(dx, dy) in &edges {
        // Slopes ascend; mirroring y flips the turn direction.
        let dy = if turn == 1 { dy } else { -dy };
        cur = Point::new(cur.x + dx, cur.y + dy);
        points.push(cur);
    }
    let chain = ConvexChain { points, turn };
    debug_assert!(chain.verify());
    chain
}

/// Deterministic convex polygon with exactly `m` lattice vertices (strictly
/// convex, counterclockwise). Uses rounded circle points, growing the radius
/// until all positions are distinct and strictly convex.
pub fn convex_polygon(m: usize) -> Vec<Point> {
    assert!(m >= 3);
    let mut r = (m as f64).max(3.0);
    loop {
        let mut pts = Vec::with_capacity(m);
        for i in 0..m {
            let ang = 2.0 * std::f64::consts::PI * (i as f64 + 0.217) / m as f64;
            let x = (r * ang.cos()).round() as i64;
            let y = (r * ang.sin()).round() as i64;
            pts.push(Point::new(x, y));
        }
        let strictly_convex = (0..m).all(|i| {
            orient(pts[i], pts[(i + 1) % m], pts[(i + 2) % m]) == 1
        });
        if strictly_convex {
            return pts;
        }
        r *= 1.5;
        assert!(r < 1e15, "convex polygon construction runaway");
    }
}

/// Lens ("valley") chain: `k` lattice points strictly on the `outward` side
/// of the chord from `u` to `v`, forming a strictly convex subchain whose
/// concave side faces the chord. Walking u -> lens -> v, the interior lens
/// vertices all turn the same way (reflex in the closed polygon) while the
/// two horn corners at the ends turn the other way.
///
/// Returns only the interior lens points (not u, v).
pub fn lens_chain_between(
    u: Point,
    v: Point,
    k: usize,
    outward: (i64, i64),
) -> Result<Vec<Point>, GeometryError> {
    assert!(k >= 1);
    let chord = (v.x as i128 - u.x as i128, v.y as i128 - u.y as i128);
    let out = (outward.0 as i128, outward.1 as i128);
    let cross = chord.0 * out.1 - chord.1 * out.0;
    if cross == 0 {
        return Err(GeometryError::BadPolygon("outward parallel to chord".into()));
    }
    if k == 1 {
        // Single lens vertex: the midpoint pushed outward.
        let p = Point::checked(
            ((u.x as i128 + v.x as i128) / 2 + out.0 * 2) as i64,
            ((u.y as i128 + v.y as i128) / 2 + out.1 * 2) as i64,
        )?;
        return Ok(vec![p]);
    }
    // Valley profile in units of `outward`: horns at the ends, a strictly
    // convex sag in the middle. The horn offset exceeds four times the sag
    // depth so every lens vertex stays visible from both chord endpoints
    // (the ray from an endpoint to the far horn passes under the sag), and
    // the discrete second difference of 6 dominates rounding noise.
    let n = k as i128;
    let mut drop = Vec::with_capacity(k);
    for i in 1..=n {
        drop.push(3 * (i - 1) * (n - i));
    }
    let range = *drop.iter().max().unwrap();
    let horn = 4 * range + 8 * (n + 1);
    let denom = n + 1;
    let mut pts = Vec::with_capacity(k);
    for (idx, d) in drop.iter().enumerate() {
        let i = idx as i128 + 1;
        let along_x = u.x as i128 + chord.0 * i / denom;
        let along_y = u.y as i128 + chord.1 * i / denom;
        let off = horn - d;
        let p = Point::checked((along_x + out.0 * off) as i64, (along_y + out.1 * off) as i64)?;
        pts.push(p);
    }
    // Exact checks: strictly outward of the chord, strictly convex subchain,
    // horn corners turning against the valley.
    let side = |p: Point| -> i128 {
        let d = (p.x as i128 - u.x as i128, p.y as i128 - u.y as i128);
        chord.0 * d.1 - chord.1 * d.0
    };
    let want = side(Point::checked((u.x as i128 + out.0) as i64, (u.y as i128 + out.1) as i64)?);
    for p in &pts {
        if side(*p) == 0 || (side(*p) > 0) != (want > 0) {
            return Err(GeometryError::BadPolygon("lens vertex not outward".into()));
        }
    }
    let full: Vec<Point> = std::iter::once(u)
        .chain(pts.iter().copied())
        .chain(std::iter::once(v))
        .collect();
    if k >= 2 {
        let interior_turn = orient(full[1], full[2], full[3.min(full.len() - 1)]);
        let _ = interior_turn;
        let mut turns = Vec::new();
        for w in full.windows(3) {
            turns.push(orient(w[0], w[1], w[2]));
        }
        // turns[0] and turns[last] are the horn corners; the rest the valley.
        let horn_turn = turns[0];
        if horn_turn == 0 || *turns.last().unwrap() != horn_turn {
            return Err(GeometryError::BadPolygon("degenerate horn".into()));
        }
        for &t in &turns[1..turns.len() - 1] {
            if t != -horn_turn {
                return Err(GeometryError::BadPolygon("lens valley not convex".into()));
            }
        }
    }
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_is_convex() {
        for k in [1usize, 2, 3, 5, 12, 20, 40] {
            for turn in [1, -1] {
                let c = convex_chain(k, turn);
                assert_eq!(c.points.len(), k);
                assert!(c.verify(), "k={k} turn={turn}");
            }
        }
    }

    #[test]
    fn chain_grid_bound() {
        // Empirically the constant is small; freeze a generous bound.
        for k in [10usize, 20, 40, 80] {
            let c = convex_chain(k, 1);
            let side = c.grid_side() as f64;
            assert!(
                side <= 4.0 * (k as f64).powf(1.5),
                "k={k} side={side}"
            );
        }
    }

    #[test]
    fn all_triples_same_orientation() {
        let c = convex_chain(20, 1);
        let p = &c.points;
        for i in 0..p.len() {
            for j in (i + 1)..p.len() {
                for k in (j + 1)..p.len() {
                    assert_eq!(orient(p[i], p[j], p[k]), 1);
                }
            }
        }
    }

    #[test]
    fn convex_polygons() {
        for m in 3..=16 {
            let p = convex_polygon(m);
            assert_eq!(p.len(), m);
            for i in 0..m {
                assert_eq!(orient(p[i], p[(i + 1) % m], p[(i + 2) % m]), 1);
            }
        }
    }

    #[test]
    fn lens_chain_shape() {
        let u = Point::new(0, 100);
        let v = Point::new(0, -100);
        let lens = lens_chain_between(u, v, 5, (1, 0)).unwrap();
        assert_eq!(lens.len(), 5);
        for p in &lens {
            assert!(p.x > 0);
        }
    }
}

use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::HashSet;

use super::dp::{count_simple_poly, cycle_dp};
use super::CountError;
use crate::geometry::polygon::dir_in_wedge;
use crate::geometry::{properly_cross, CleanMatrix, Point, PolygonWithHoles, Segment, VertexId};

/// Exact triangulation count for a polygon with holes.
///
/// Every triangulation contains, for each hole, a diagonal from the hole's
/// lexicographically smallest vertex to some vertex strictly to its left on
/// another boundary component. Summing over ordered combinations of these
/// left diagonals (cutting the polygon open along them and forbidding all
/// earlier candidates of each hole) counts every triangulation exactly once.
pub fn count_with_holes(poly: &PolygonWithHoles) -> Result<BigUint, CountError> {
    if poly.num_holes() == 0 {
        return Ok(count_simple_poly(poly));
    }
    let vis = CleanMatrix::compute(poly);
    let n = poly.num_vertices();
    let pts: Vec<Point> = (0..n).map(|i| poly.vertex(i)).collect();

    // Leftmost (lexicographically smallest) vertex of each hole, plus the
    // ordered candidate left diagonals.
    let mut holes: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for c in 1..=poly.num_holes() {
        let range = poly.cycle_range(c);
        let u = range
            .clone()
            .min_by_key(|&i| (pts[i].x, pts[i].y))
            .expect("hole has vertices");
        let mut cands: Vec<VertexId> = (0..n)
            .filter(|&v| pts[v].x < pts[u].x && vis.diagonal(u, v))
            .collect();
        cands.sort_by_key(|&v| (pts[v].x, pts[v].y, v));
        if cands.is_empty() {
            return Err(CountError::Internal(format!(
                "hole {} has no left diagonal",
                c
            )));
        }
        holes.push((u, cands));
    }
    // Cut targets always lie strictly left of the hole's leftmost vertex, so
    // merging holes in order of that vertex keeps targets already merged.
    holes.sort_by_key(|&(u, _)| (pts[u].x, pts[u].y));

    let mut total = BigUint::zero();
    let mut choice = vec![0usize; holes.len()];
    'outer: loop {
        total += count_one_combination(poly, &vis, &pts, &holes, &choice);
        // Odometer step.
        for i in (0..choice.len()).rev() {
            choice[i] += 1;
            if choice[i] < holes[i].1.len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    Ok(total)
}

fn count_one_combination(
    poly: &PolygonWithHoles,
    vis: &CleanMatrix,
    pts: &[Point],
    holes: &[(VertexId, Vec<VertexId>)],
    choice: &[usize],
) -> BigUint {
    let cuts: Vec<(VertexId, VertexId)> = holes
        .iter()
        .zip(choice)
        .map(|(&(u, ref cands), &i)| (u, cands[i]))
        .collect();
    // Pairwise compatibility: chosen cut diagonals must not properly cross.
    for i in 0..cuts.len() {
        for j in (i + 1)..cuts.len() {
            let (a, b) = cuts[i];
            let (c, d) = cuts[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let si = Segment::new(pts[a], pts[b]).unwrap();
            let sj = Segment::new(pts[c], pts[d]).unwrap();
            if properly_cross(&si, &sj) {
                return BigUint::zero();
            }
        }
    }

    // Merge all holes into the outer walk, duplicating each cut's endpoints.
    let mut walk: Vec<VertexId> = poly.cycle_range(0).collect();
    for &(u, v) in &cuts {
        // Position of v in the current walk (wedge-disambiguated when v has
        // already been duplicated by an earlier cut).
        let positions: Vec<usize> = walk
            .iter()
            .enumerate()
            .filter(|(_, &id)| id == v)
            .map(|(idx, _)| idx)
            .collect();
        let dir = pts[u].sub(pts[v]);
        let pv = if positions.len() == 1 {
            positions[0]
        } else {
            let mut hit = None;
            for &idx in &positions {
                let m = walk.len();
                let nxt = pts[walk[(idx + 1) % m]].sub(pts[v]);
                let prv = pts[walk[(idx + m - 1) % m]].sub(pts[v]);
                if dir_in_wedge(nxt, prv, dir) {
                    hit = Some(idx);
                    break;
                }
            }
            match hit {
                Some(idx) => idx,
                // Geometrically impossible combination.
                None => return BigUint::zero(),
            }
        };
        // Hole walk starting at u, in stored (clockwise) order.
        let range = poly.cycle_range(poly.cycle_of(u));
        let lo = range.start;
        let m = range.len();
        let off = u - lo;
        let mut insert: Vec<VertexId> = (0..m).map(|k| lo + (off + k) % m).collect();
        insert.push(u);
        insert.push(v);
        let tail = walk.split_off(pv + 1);
        walk.extend(insert);
        walk.extend(tail);
    }

    // Forbidden diagonals: earlier candidates of each hole.
    let mut forbidden: HashSet<(VertexId, VertexId)> = HashSet::new();
    for (&(u, ref cands), &i) in holes.iter().zip(choice) {
        for &v in &cands[..i] {
            forbidden.insert((u.min(v), u.max(v)));
        }
    }

    let big = walk.len();
    let wpts: Vec<Point> = walk.iter().map(|&id| pts[id]).collect();
    // Precompute chord validity over walk positions.
    let mut ok = vec![false; big * big];
    for p in 0..big {
        for q in (p + 1)..big {
            ok[p * big + q] = chord_ok(poly, vis, pts, &walk, &wpts, &cuts, &forbidden, p, q);
            ok[q * big + p] = ok[p * big + q];
        }
    }
    cycle_dp(&wpts, |p, q| ok[p.min(q) * big + p.max(q)], |_, _, _| true)
}

#[allow(clippy::too_many_arguments)]
fn chord_ok(
    poly: &PolygonWithHoles,
    vis: &CleanMatrix,
    pts: &[Point],
    walk: &[VertexId],
    wpts: &[Point],
    cuts: &[(VertexId, VertexId)],
    forbidden: &HashSet<(VertexId, VertexId)>,
    p: usize,
    q: usize,
) -> bool {
    let big = walk.len();
    if q == p + 1 || (p == 0 && q == big - 1) {
        return true;
    }
    let (a, b) = (walk[p], walk[q]);
    if a == b || wpts[p] == wpts[q] {
        return false;
    }
    if !vis.visible(a, b) {
        return false;
    }
    if forbidden.contains(&(a.min(b), a.max(b))) {
        return false;
    }
    // Local wedge at both walk positions (narrowed at duplicated vertices).
    for (s, t) in [(p, q), (q, p)] {
        let v = wpts[s];
        let nxt = wpts[(s + 1) % big].sub(v);
        let prv = wpts[(s + big - 1) % big].sub(v);
        let dir = wpts[t].sub(v);
        if !dir_in_wedge(nxt, prv, dir) {
            return false;
        }
    }
    // Must not cross any cut diagonal (they are boundary edges of the walk).
    let seg = Segment::new(pts[a], pts[b]).unwrap();
    for &(c, d) in cuts {
        if a == c || a == d || b == c || b == d {
            continue;
        }
        let cd = Segment::new(pts[c], pts[d]).unwrap();
        if properly_cross(&seg, &cd) {
            return false;
        }
    }
    let _ = poly;
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::enumerate_bruteforce;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn simple_polygon_delegates() {
        let p = PolygonWithHoles::simple(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]).unwrap();
        assert_eq!(count_with_holes(&p).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn square_ring_matches_oracle() {
        let outer = vec![pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)];
        let hole = vec![pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)];
        let poly = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        let dp = count_with_holes(&poly).unwrap();
        let oracle = enumerate_bruteforce(&poly, false, 1 << 26);
        assert!(oracle.complete);
        assert_eq!(dp, oracle.count);
    }

    #[test]
    fn triangle_hole_matches_oracle() {
        let outer = vec![pt(0, 0), pt(8, 0), pt(8, 7), pt(0, 7)];
        let hole = vec![pt(3, 2), pt(5, 3), pt(4, 5)];
        let poly = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        let dp = count_with_holes(&poly).unwrap();
        let oracle = enumerate_bruteforce(&poly, false, 1 << 26);
        assert!(oracle.complete);
        assert_eq!(dp, oracle.count);
    }

    #[test]
    fn two_holes_match_oracle() {
        let outer = vec![pt(0, 0), pt(12, 0), pt(12, 6), pt(0, 6)];
        let h1 = vec![pt(2, 2), pt(4, 2), pt(3, 4)];
        let h2 = vec![pt(8, 2), pt(10, 3), pt(8, 4)];
        let poly = PolygonWithHoles::new(outer, vec![h1, h2]).unwrap();
        let dp = count_with_holes(&poly).unwrap();
        let oracle = enumerate_bruteforce(&poly, false, 1 << 26);
        assert!(oracle.complete);
        assert_eq!(dp, oracle.count);
    }
}

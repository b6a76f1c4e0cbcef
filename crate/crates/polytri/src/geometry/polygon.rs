use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::point::Point;
use super::segment::{on_segment, orient, segments_touch, strictly_on_open_segment, Segment};
use super::GeometryError;

/// Flattened vertex index into a [`PolygonWithHoles`].
pub type VertexId = usize;

/// A polygon with holes: one outer cycle (counterclockwise) plus zero or more
/// hole cycles (clockwise). The union of the cycles is a 2-regular planar
/// straight-line graph whose single bounded interior face has every segment
/// as a side: all vertices are distinct points and edges meet only at shared
/// endpoints.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonWithHoles {
    cycles: Vec<Vec<Point>>,
    #[serde(skip)]
    starts: Vec<usize>,
}

fn cross128(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn dot128(a: (i128, i128), b: (i128, i128)) -> i128 {
    a.0 * b.0 + a.1 * b.1
}

/// Twice the signed area of a cycle, exact (positive = counterclockwise).
pub fn signed_area2(cycle: &[Point]) -> BigInt {
    let mut acc = BigInt::zero();
    let n = cycle.len();
    for i in 0..n {
        let a = cycle[i];
        let b = cycle[(i + 1) % n];
        acc += BigInt::from(a.x) * BigInt::from(b.y) - BigInt::from(b.x) * BigInt::from(a.y);
    }
    acc
}

impl PolygonWithHoles {
    /// Build a simple polygon (no holes). Vertex order may be either
    /// orientation; it is normalized to counterclockwise.
    pub fn simple(outer: Vec<Point>) -> Result<Self, GeometryError> {
        Self::new(outer, Vec::new())
    }

    /// Build and validate a polygon with holes. Cycle orientations are
    /// normalized (outer counterclockwise, holes clockwise).
    pub fn new(outer: Vec<Point>, holes: Vec<Vec<Point>>) -> Result<Self, GeometryError> {
        let mut cycles = Vec::with_capacity(1 + holes.len());
        cycles.push(outer);
        cycles.extend(holes);
        Self::from_cycles(cycles)
    }

    /// Build from raw cycles; cycle 0 is taken as the outer boundary.
    pub fn from_cycles(mut cycles: Vec<Vec<Point>>) -> Result<Self, GeometryError> {
        if cycles.is_empty() {
            return Err(GeometryError::BadPolygon("no cycles".into()));
        }
        for cycle in &cycles {
            if cycle.len() < 3 {
                return Err(GeometryError::BadPolygon(format!(
                    "cycle with {} vertices",
                    cycle.len()
                )));
            }
        }
        // Normalize orientations.
        for (k, cycle) in cycles.iter_mut().enumerate() {
            let a2 = signed_area2(cycle);
            if a2.is_zero() {
                return Err(GeometryError::BadPolygon("cycle with zero area".into()));
            }
            let ccw = a2.is_positive();
            if (k == 0 && !ccw) || (k > 0 && ccw) {
                cycle.reverse();
            }
        }
        let poly = Self::assemble(cycles);
        poly.validate()?;
        Ok(poly)
    }

    fn assemble(cycles: Vec<Vec<Point>>) -> Self {
        let mut starts = Vec::with_capacity(cycles.len() + 1);
        let mut acc = 0;
        for c in &cycles {
            starts.push(acc);
            acc += c.len();
        }
        starts.push(acc);
        PolygonWithHoles { cycles, starts }
    }

    /// Re-derive internal indexes after deserialization.
    pub fn rebuild(self) -> Result<Self, GeometryError> {
        Self::from_cycles(self.cycles)
    }

    fn validate(&self) -> Result<(), GeometryError> {
        // Distinct vertices.
        let mut pts: Vec<Point> = self.cycles.iter().flatten().copied().collect();
        pts.sort();
        for w in pts.windows(2) {
            if w[0] == w[1] {
                return Err(GeometryError::NotSimple(format!(
                    "repeated vertex {:?}",
                    w[0]
                )));
            }
        }
        // No spikes: consecutive edges may be collinear only if they continue.
        for cycle in &self.cycles {
            let n = cycle.len();
            for i in 0..n {
                let a = cycle[i];
                let b = cycle[(i + 1) % n];
                let c = cycle[(i + 2) % n];
                if orient(a, b, c) == 0 && dot128(a.sub(b), c.sub(b)) > 0 {
                    return Err(GeometryError::NotSimple(format!("spike at {:?}", b)));
                }
            }
        }
        // Pairwise edge disjointness (except shared endpoints of adjacent edges).
        let edges = self.all_edges();
        for i in 0..edges.len() {
            let (ai, bi) = edges[i];
            let si = Segment::new(self.vertex(ai), self.vertex(bi)).unwrap();
            let (x0, y0, x1, y1) = si.bbox();
            for (j, &(aj, bj)) in edges.iter().enumerate().skip(i + 1) {
                let _ = j;
                let shared = [ai, bi].iter().filter(|v| **v == aj || **v == bj).count();
                if shared > 0 {
                    // Adjacent edges share one endpoint; forbid any further contact.
                    let (other_i, other_j) = if ai == aj {
                        (bi, bj)
                    } else if ai == bj {
                        (bi, aj)
                    } else if bi == aj {
                        (ai, bj)
                    } else {
                        (ai, aj)
                    };
                    let shared_v = if ai == aj || ai == bj { ai } else { bi };
                    let sp = self.vertex(shared_v);
                    let oi = self.vertex(other_i);
                    let oj = self.vertex(other_j);
                    if on_segment(sp, oi, oj) || on_segment(sp, oj, oi) {
                        return Err(GeometryError::NotSimple(format!(
                            "edges overlap at {:?}",
                            sp
                        )));
                    }
                    continue;
                }
                let sj = Segment::new(self.vertex(aj), self.vertex(bj)).unwrap();
                let (u0, v0, u1, v1) = sj.bbox();
                if u0 > x1 || x0 > u1 || v0 > y1 || y0 > v1 {
                    continue;
                }
                if segments_touch(&si, &sj) {
                    return Err(GeometryError::NotSimple(format!(
                        "edges ({:?}-{:?}) and ({:?}-{:?}) intersect",
                        si.p, si.q, sj.p, sj.q
                    )));
                }
            }
        }
        // Holes strictly inside the outer cycle and not inside each other.
        for k in 1..self.cycles.len() {
            let probe = self.cycles[k][0];
            if !point_strictly_in_cycle(&self.cycles[0], probe) {
                return Err(GeometryError::BadPolygon(format!(
                    "hole {} not inside the outer cycle",
                    k
                )));
            }
            for m in 1..self.cycles.len() {
                if m != k && point_strictly_in_cycle(&self.cycles[m], probe) {
                    return Err(GeometryError::BadPolygon(format!(
                        "hole {} nested inside hole {}",
                        k, m
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn cycles(&self) -> &[Vec<Point>] {
        &self.cycles
    }

    pub fn outer(&self) -> &[Point] {
        &self.cycles[0]
    }

    pub fn num_holes(&self) -> usize {
        self.cycles.len() - 1
    }

    pub fn num_vertices(&self) -> usize {
        *self.starts.last().unwrap()
    }

    pub fn vertex(&self, id: VertexId) -> Point {
        let c = self.cycle_of(id);
        self.cycles[c][id - self.starts[c]]
    }

    pub fn cycle_of(&self, id: VertexId) -> usize {
        match self.starts.binary_search(&id) {
            Ok(k) if k < self.cycles.len() => k,
            Ok(k) => k - 1,
            Err(k) => k - 1,
        }
    }

    pub fn cycle_range(&self, c: usize) -> std::ops::Range<usize> {
        self.starts[c]..self.starts[c + 1]
    }

    /// Next vertex along the boundary cycle containing `id`.
    pub fn next(&self, id: VertexId) -> VertexId {
        let c = self.cycle_of(id);
        let lo = self.starts[c];
        let hi = self.starts[c + 1];
        if id + 1 == hi {
            lo
        } else {
            id + 1
        }
    }

    pub fn prev(&self, id: VertexId) -> VertexId {
        let c = self.cycle_of(id);
        let lo = self.starts[c];
        let hi = self.starts[c + 1];
        if id == lo {
            hi - 1
        } else {
            id - 1
        }
    }

    /// All directed boundary edges (one per undirected edge, in walk order).
    pub fn all_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.num_vertices());
        for c in 0..self.cycles.len() {
            for id in self.cycle_range(c) {
                out.push((id, self.next(id)));
            }
        }
        out
    }

    pub fn is_boundary_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.next(a) == b || self.next(b) == a
    }

    /// True iff the direction from vertex `id` toward point `t` points
    /// strictly into the polygon interior at `id`.
    pub fn dir_in_interior_wedge(&self, id: VertexId, t: Point) -> bool {
        let v = self.vertex(id);
        let a = self.vertex(self.next(id)).sub(v);
        let b = self.vertex(self.prev(id)).sub(v);
        let d = t.sub(v);
        if d == (0, 0) {
            return false;
        }
        dir_in_wedge(a, b, d)
    }

    /// True iff the open segment between vertices `a` and `b` lies entirely in
    /// the interior (a "clean" diagonal). Boundary edges are not clean
    /// diagonals; collinear grazing of any third vertex makes a segment dirty.
    pub fn clean_diagonal(&self, a: VertexId, b: VertexId) -> bool {
        if a == b || self.is_boundary_edge(a, b) {
            return false;
        }
        let pa = self.vertex(a);
        let pb = self.vertex(b);
        if !self.dir_in_interior_wedge(a, pb) || !self.dir_in_interior_wedge(b, pa) {
            return false;
        }
        let diag = Segment::new(pa, pb).unwrap();
        let (x0, y0, x1, y1) = diag.bbox();
        for (u, v) in self.all_edges() {
            if u == a || u == b || v == a || v == b {
                // Shares an endpoint: only collinear overlap can hurt, which
                // shows up as the far endpoint sitting on the open diagonal.
                let far = if u == a || u == b { v } else { u };
                if strictly_on_open_segment(pa, pb, self.vertex(far)) {
                    return false;
                }
                continue;
            }
            let pu = self.vertex(u);
            let pv = self.vertex(v);
            if pu.x.max(pv.x) < x0
                || pu.x.min(pv.x) > x1
                || pu.y.max(pv.y) < y0
                || pu.y.min(pv.y) > y1
            {
                continue;
            }
            let e = Segment::new(pu, pv).unwrap();
            if segments_touch(&diag, &e) {
                return false;
            }
        }
        true
    }

    /// Visibility between two vertices: either a boundary edge or a clean
    /// interior diagonal.
    pub fn visible(&self, a: VertexId, b: VertexId) -> bool {
        if a == b {
            return false;
        }
        self.is_boundary_edge(a, b) || self.clean_diagonal(a, b)
    }

    /// Strict interior test for an integer point (boundary counts as outside).
    pub fn point_strictly_inside(&self, p: Point) -> bool {
        // On-boundary check first.
        for (u, v) in self.all_edges() {
            if on_segment(self.vertex(u), self.vertex(v), p) {
                return false;
            }
        }
        if !point_strictly_in_cycle(&self.cycles[0], p) {
            return false;
        }
        for hole in &self.cycles[1..] {
            if point_strictly_in_cycle(hole, p) {
                return false;
            }
        }
        true
    }
}

/// Strict angular wedge test: is `d` strictly inside the CCW sector from `a`
/// to `b`? Handles convex, reflex, and straight (antiparallel) sectors.
pub fn dir_in_wedge(a: (i128, i128), b: (i128, i128), d: (i128, i128)) -> bool {
    let ab = cross128(a, b);
    let ad = cross128(a, d);
    let db = cross128(d, b);
    if ab > 0 {
        ad > 0 && db > 0
    } else if ab < 0 {
        ad > 0 || db > 0
    } else if dot128(a, b) < 0 {
        // Straight vertex: sector is the open half-plane to the left of `a`.
        ad > 0
    } else {
        // Degenerate (parallel) sector: nothing is strictly inside.
        false
    }
}

/// Exact crossing-number test, boundary not handled (use with interior probes).
pub fn point_strictly_in_cycle(cycle: &[Point], p: Point) -> bool {
    let n = cycle.len();
    let mut inside = false;
    for i in 0..n {
        let a = cycle[i];
        let b = cycle[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            // x-coordinate of the edge at height p.y, compared exactly:
            // p.x < a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            let (dx, dy) = b.sub(a);
            let lhs = (p.x as i128 - a.x as i128) * dy;
            let rhs = (p.y as i128 - a.y as i128) * dx;
            let crosses = if dy > 0 { lhs < rhs } else { lhs > rhs };
            if crosses {
                inside = !inside;
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    fn square(size: i64) -> Vec<Point> {
        vec![pt(0, 0), pt(size, 0), pt(size, size), pt(0, size)]
    }

    #[test]
    fn build_simple() {
        let p = PolygonWithHoles::simple(square(4)).unwrap();
        assert_eq!(p.num_vertices(), 4);
        assert_eq!(p.num_holes(), 0);
    }

    #[test]
    fn orientation_normalized() {
        let mut sq = square(4);
        sq.reverse();
        let p = PolygonWithHoles::simple(sq).unwrap();
        assert!(signed_area2(p.outer()).is_positive());
    }

    #[test]
    fn square_ring() {
        let outer = square(6);
        let hole = vec![pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)];
        let p = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        assert_eq!(p.num_holes(), 1);
        assert!(signed_area2(&p.cycles()[1]).is_negative());
    }

    #[test]
    fn hole_outside_rejected() {
        let outer = square(3);
        let hole = vec![pt(5, 5), pt(6, 5), pt(6, 6), pt(5, 6)];
        assert!(PolygonWithHoles::new(outer, vec![hole]).is_err());
    }

    #[test]
    fn self_intersection_rejected() {
        let bow = vec![pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)];
        assert!(PolygonWithHoles::simple(bow).is_err());
    }

    #[test]
    fn convex_diagonals_clean() {
        let p = PolygonWithHoles::simple(square(4)).unwrap();
        assert!(p.clean_diagonal(0, 2));
        assert!(p.clean_diagonal(1, 3));
        assert!(!p.clean_diagonal(0, 1)); // boundary edge, not a diagonal
        assert!(p.visible(0, 1));
    }

    #[test]
    fn hole_blocks_visibility() {
        let outer = square(6);
        let hole = vec![pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)];
        let p = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        // Outer corners (0,0) and (6,6) are separated by the hole.
        assert!(!p.visible(0, 2));
        // Outer corner sees the near hole corner.
        assert!(p.visible(0, 4));
    }

    #[test]
    fn l_shape_reflex_blocked() {
        // L-shaped hexagon; (1,1)-ish reflex corner blocks one diagonal.
        let l = vec![pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)];
        let p = PolygonWithHoles::simple(l).unwrap();
        // Vertex 1 = (4,0) and vertex 4 = (2,4): blocked by reflex corner (2,2).
        assert!(!p.visible(1, 4));
        assert!(p.visible(0, 3));
    }

    #[test]
    fn interior_point_test() {
        let outer = square(6);
        let hole = vec![pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)];
        let p = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        assert!(p.point_strictly_inside(pt(1, 1)));
        assert!(!p.point_strictly_inside(pt(3, 3))); // in the hole
        assert!(!p.point_strictly_inside(pt(0, 0))); // boundary
        assert!(!p.point_strictly_inside(pt(7, 7))); // outside
    }
}

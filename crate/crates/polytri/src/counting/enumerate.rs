use num_bigint::BigUint;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

use crate::geometry::{orient, properly_cross, CleanMatrix, Point, PolygonWithHoles, Segment, VertexId};

/// One triangulation as a set of triangles plus the interior diagonals used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub triangles: Vec<[VertexId; 3]>,
    pub diagonals: Vec<(VertexId, VertexId)>,
}

#[derive(Debug)]
pub struct EnumerationResult {
    pub count: BigUint,
    /// False if the node budget ran out; the count is then a lower bound.
    pub complete: bool,
    pub listing: Option<Vec<Triangulation>>,
    pub nodes: u64,
}

struct Enumerator<'a> {
    poly: &'a PolygonWithHoles,
    pts: Vec<Point>,
    vis: CleanMatrix,
    fronts: BTreeSet<(VertexId, VertexId)>,
    diagonals: Vec<(VertexId, VertexId)>,
    triangles: Vec<[VertexId; 3]>,
    count: BigUint,
    listing: Option<Vec<Triangulation>>,
    nodes: u64,
    budget: u64,
    aborted: bool,
    expected_triangles: usize,
}

impl<'a> Enumerator<'a> {
    fn segment(&self, a: VertexId, b: VertexId) -> Segment {
        Segment::new(self.pts[a], self.pts[b]).unwrap()
    }

    fn chord_compatible(&self, a: VertexId, b: VertexId) -> bool {
        if self.vis.is_edge(a, b) {
            return true;
        }
        if self.diagonals.iter().any(|&(c, d)| (c == a && d == b) || (c == b && d == a)) {
            return true;
        }
        let s = self.segment(a, b);
        for &(c, d) in &self.diagonals {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            if properly_cross(&s, &self.segment(c, d)) {
                return false;
            }
        }
        true
    }

    fn vertex_in_triangle(&self, a: VertexId, b: VertexId, w: VertexId) -> bool {
        let (pa, pb, pw) = (self.pts[a], self.pts[b], self.pts[w]);
        let min_x = pa.x.min(pb.x).min(pw.x);
        let max_x = pa.x.max(pb.x).max(pw.x);
        let min_y = pa.y.min(pb.y).min(pw.y);
        let max_y = pa.y.max(pb.y).max(pw.y);
        for u in 0..self.pts.len() {
            if u == a || u == b || u == w {
                continue;
            }
            let p = self.pts[u];
            if p.x < min_x || p.x > max_x || p.y < min_y || p.y > max_y {
                continue;
            }
            if orient(pa, pb, p) == 1 && orient(pb, pw, p) == 1 && orient(pw, pa, p) == 1 {
                return true;
            }
        }
        false
    }

    fn record(&mut self) {
        debug_assert_eq!(self.triangles.len(), self.expected_triangles);
        self.count += BigUint::one();
        if let Some(list) = &mut self.listing {
            list.push(Triangulation {
                triangles: self.triangles.clone(),
                diagonals: self.diagonals.clone(),
            });
        }
    }

    fn recurse(&mut self) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let (a, b) = match self.fronts.iter().next() {
            None => {
                self.record();
                return;
            }
            Some(&e) => e,
        };
        let n = self.pts.len();
        for w in 0..n {
            if w == a || w == b {
                continue;
            }
            if orient(self.pts[a], self.pts[b], self.pts[w]) != 1 {
                continue;
            }
            if !self.vis.visible(a, w) || !self.vis.visible(w, b) {
                continue;
            }
            if !self.chord_compatible(a, w) || !self.chord_compatible(w, b) {
                continue;
            }
            if self.vertex_in_triangle(a, b, w) {
                continue;
            }
            // Apply.
            let mut added_diags = Vec::new();
            for (u, v) in [(a, w), (w, b)] {
                if !self.vis.is_edge(u, v)
                    && !self
                        .diagonals
                        .iter()
                        .any(|&(c, d)| (c == u && d == v) || (c == v && d == u))
                {
                    self.diagonals.push((u.min(v), u.max(v)));
                    added_diags.push((u.min(v), u.max(v)));
                }
            }
            let mut removed = Vec::new();
            let mut inserted = Vec::new();
            for e in [(a, b), (b, w), (w, a)] {
                if self.fronts.remove(&e) {
                    removed.push(e);
                } else {
                    let rev = (e.1, e.0);
                    self.fronts.insert(rev);
                    inserted.push(rev);
                }
            }
            self.triangles.push([a, b, w]);

            self.recurse();

            // Undo.
            self.triangles.pop();
            for e in inserted {
                self.fronts.remove(&e);
            }
            for e in removed {
                self.fronts.insert(e);
            }
            for d in added_diags {
                let pos = self.diagonals.iter().rposition(|&x| x == d).unwrap();
                self.diagonals.remove(pos);
            }
            if self.aborted {
                return;
            }
        }
    }
}

/// Canonical backtracking enumeration of all triangulations of a polygon
/// with holes. Independent of the dynamic-programming counters: it extends
/// the smallest uncovered directed boundary edge by every valid apex.
///
/// `budget` caps the number of search nodes; on exhaustion the result is
/// marked incomplete and the count is a lower bound.
pub fn enumerate_bruteforce(
    poly: &PolygonWithHoles,
    want_listing: bool,
    budget: u64,
) -> EnumerationResult {
    let n = poly.num_vertices();
    let pts: Vec<Point> = (0..n).map(|i| poly.vertex(i)).collect();
    let vis = CleanMatrix::compute(poly);
    let mut fronts = BTreeSet::new();
    for (a, b) in poly.all_edges() {
        fronts.insert((a, b));
    }
    let expected = n + 2 * poly.num_holes() - 2;
    let mut e = Enumerator {
        poly,
        pts,
        vis,
        fronts,
        diagonals: Vec::new(),
        triangles: Vec::new(),
        count: BigUint::zero(),
        listing: if want_listing { Some(Vec::new()) } else { None },
        nodes: 0,
        budget,
        aborted: false,
        expected_triangles: expected,
    };
    let _ = e.poly;
    e.recurse();
    EnumerationResult {
        count: e.count,
        complete: !e.aborted,
        listing: e.listing,
        nodes: e.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{catalan, count_simple};
    use crate::geometry::convex_polygon;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn triangle_once() {
        let p = PolygonWithHoles::simple(vec![pt(0, 0), pt(2, 0), pt(0, 2)]).unwrap();
        let r = enumerate_bruteforce(&p, true, 1 << 20);
        assert!(r.complete);
        assert_eq!(r.count, BigUint::from(1u32));
        assert_eq!(r.listing.unwrap().len(), 1);
    }

    #[test]
    fn convex_matches_catalan() {
        for m in 3..=8usize {
            let poly = PolygonWithHoles::simple(convex_polygon(m)).unwrap();
            let r = enumerate_bruteforce(&poly, false, 1 << 24);
            assert!(r.complete);
            assert_eq!(r.count, catalan(m as u64 - 2), "m = {m}");
        }
    }

    #[test]
    fn matches_dp_on_nonconvex() {
        let p = vec![
            pt(0, 0),
            pt(6, 0),
            pt(6, 4),
            pt(4, 1),
            pt(3, 4),
            pt(1, 2),
            pt(0, 5),
        ];
        let dp = count_simple(&p).unwrap();
        let poly = PolygonWithHoles::simple(p).unwrap();
        let r = enumerate_bruteforce(&poly, false, 1 << 24);
        assert!(r.complete);
        assert_eq!(r.count, dp);
    }

    #[test]
    fn square_ring_consistent_triangle_count() {
        let outer = vec![pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)];
        let hole = vec![pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)];
        let poly = PolygonWithHoles::new(outer, vec![hole]).unwrap();
        let r = enumerate_bruteforce(&poly, true, 1 << 24);
        assert!(r.complete);
        // 8 triangles per triangulation for n=8, h=1.
        for t in r.listing.unwrap() {
            assert_eq!(t.triangles.len(), 8);
        }
        assert!(r.count > BigUint::zero());
    }

    #[test]
    fn budget_aborts() {
        let poly = PolygonWithHoles::simple(convex_polygon(12)).unwrap();
        let r = enumerate_bruteforce(&poly, false, 10);
        assert!(!r.complete);
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::point::{Point, RationalPoint};
use super::GeometryError;

/// A closed line segment with distinct integer endpoints.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Self, GeometryError> {
        if p == q {
            return Err(GeometryError::DegenerateSegment(p.x, p.y));
        }
        Ok(Segment { p, q })
    }

    pub fn direction(&self) -> (i128, i128) {
        self.q.sub(self.p)
    }

    pub fn len2(&self) -> i128 {
        self.p.dist2(self.q)
    }

    pub fn bbox(&self) -> (i64, i64, i64, i64) {
        (
            self.p.x.min(self.q.x),
            self.p.y.min(self.q.y),
            self.p.x.max(self.q.x),
            self.p.y.max(self.q.y),
        )
    }
}

/// Sign of twice the signed area of the triangle `pqr`: +1 for a left turn
/// (counterclockwise), -1 for a right turn, 0 for collinear. Exact.
pub fn orient(p: Point, q: Point, r: Point) -> i32 {
    let (ax, ay) = q.sub(p);
    let (bx, by) = r.sub(p);
    let det = ax * by - ay * bx;
    match det.cmp(&0) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
    }
}

/// True iff `r` lies on the closed segment `pq` (collinear and within the box).
pub fn on_segment(p: Point, q: Point, r: Point) -> bool {
    if orient(p, q, r) != 0 {
        return false;
    }
    r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
}

/// True iff `r` lies strictly inside the open segment `pq`.
pub fn strictly_on_open_segment(p: Point, q: Point, r: Point) -> bool {
    r != p && r != q && on_segment(p, q, r)
}

/// Proper crossing: the open interiors intersect in exactly one point and no
/// endpoint of either segment lies on the other. Collinear overlap is not a
/// proper crossing.
pub fn properly_cross(s1: &Segment, s2: &Segment) -> bool {
    let d1 = orient(s1.p, s1.q, s2.p);
    let d2 = orient(s1.p, s1.q, s2.q);
    let d3 = orient(s2.p, s2.q, s1.p);
    let d4 = orient(s2.p, s2.q, s1.q);
    d1 * d2 < 0 && d3 * d4 < 0
}

/// Any contact at all between the two closed segments, including endpoint
/// touches and collinear overlap.
pub fn segments_touch(s1: &Segment, s2: &Segment) -> bool {
    let d1 = orient(s1.p, s1.q, s2.p);
    let d2 = orient(s1.p, s1.q, s2.q);
    let d3 = orient(s2.p, s2.q, s1.p);
    let d4 = orient(s2.p, s2.q, s1.q);
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on_segment(s1.p, s1.q, s2.p))
        || (d2 == 0 && on_segment(s1.p, s1.q, s2.q))
        || (d3 == 0 && on_segment(s2.p, s2.q, s1.p))
        || (d4 == 0 && on_segment(s2.p, s2.q, s1.q))
}

/// Exact rational intersection point of two properly crossing segments.
pub fn crossing_point(s1: &Segment, s2: &Segment) -> Result<RationalPoint, GeometryError> {
    if !properly_cross(s1, s2) {
        return Err(GeometryError::NoCrossing);
    }
    let (r_x, r_y) = s1.direction();
    let (s_x, s_y) = s2.direction();
    let denom = r_x * s_y - r_y * s_x;
    debug_assert!(denom != 0);
    let (qp_x, qp_y) = s2.p.sub(s1.p);
    let t_num = qp_x * s_y - qp_y * s_x;
    let t = BigRational::new(BigInt::from(t_num), BigInt::from(denom));
    let x = BigRational::from(BigInt::from(s1.p.x)) + &t * BigRational::from(BigInt::from(r_x));
    let y = BigRational::from(BigInt::from(s1.p.y)) + &t * BigRational::from(BigInt::from(r_y));
    Ok(RationalPoint::new(x, y))
}

/// Parameter of the crossing along `s1`, as an exact rational in (0, 1).
pub fn crossing_parameter(s1: &Segment, s2: &Segment) -> Result<BigRational, GeometryError> {
    if !properly_cross(s1, s2) {
        return Err(GeometryError::NoCrossing);
    }
    let (r_x, r_y) = s1.direction();
    let (s_x, s_y) = s2.direction();
    let denom = r_x * s_y - r_y * s_x;
    let (qp_x, qp_y) = s2.p.sub(s1.p);
    let t_num = qp_x * s_y - qp_y * s_x;
    Ok(BigRational::new(BigInt::from(t_num), BigInt::from(denom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(pt(a.0, a.1), pt(b.0, b.1)).unwrap()
    }

    #[test]
    fn orient_basic() {
        assert_eq!(orient(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
        assert_eq!(orient(pt(0, 0), pt(1, 1), pt(2, 2)), 0);
        assert_eq!(orient(pt(0, 0), pt(0, 1), pt(1, 0)), -1);
    }

    #[test]
    fn proper_crossing_cases() {
        assert!(properly_cross(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))));
        // shared endpoint only
        assert!(!properly_cross(&seg((0, 0), (1, 1)), &seg((1, 1), (2, 0))));
        // collinear overlap
        assert!(!properly_cross(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))));
    }

    #[test]
    fn crossing_points() {
        let p = crossing_point(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))).unwrap();
        assert_eq!(p, pt(1, 1).to_rational());
        let p = crossing_point(&seg((0, 0), (4, 4)), &seg((0, 1), (4, 1))).unwrap();
        assert_eq!(p, pt(1, 1).to_rational());
        // y = x/3 meets y = 1 - x/3 at x = 3/2
        let p = crossing_point(&seg((0, 0), (3, 1)), &seg((0, 1), (3, 0))).unwrap();
        assert_eq!(p.x, crate::geometry::point::rational(3, 2));
        assert_eq!(p.y, crate::geometry::point::rational(1, 2));
    }

    #[test]
    fn crossing_requires_proper() {
        assert!(crossing_point(&seg((0, 0), (1, 1)), &seg((2, 2), (3, 1))).is_err());
    }
}

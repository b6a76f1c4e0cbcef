//! Endpoint placement templates. Within one guide disk we must place two red
//! segment endpoints (rays toward far disks with roughly known slopes) and
//! one blue segment so that the blue properly crosses both rays, the rays
//! stay disjoint, and all of this is robust to small rotations of the rays.
//!
//! Directions are classified into the eight 45-degree arcs bounded by the
//! compass directions; templates are searched once per arc-pair class over a
//! small integer grid, using exact sign certificates, and cached.

use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// The eight compass directions in counterclockwise order.
pub const COMPASS: [(i64, i64); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];

/// Widened integer boundary directions per arc: the base arc k spans from
/// COMPASS[k] to COMPASS[k+1]; widening rotates each bound outward by about
/// seven degrees, absorbing the deviation of actual segment directions from
/// the nominal center-to-center slopes.
pub fn widened_arc(k: usize) -> ((i64, i64), (i64, i64)) {
    // Clockwise-widened versions of each compass direction ...
    const CW: [(i64, i64); 8] = [
        (8, -1),
        (9, 7),
        (1, 8),
        (-7, 9),
        (-8, 1),
        (-9, -7),
        (-1, -8),
        (7, -9),
    ];
    // ... and counterclockwise-widened versions.
    const CCW: [(i64, i64); 8] = [
        (8, 1),
        (7, 9),
        (-1, 8),
        (-9, 7),
        (-8, -1),
        (-7, -9),
        (1, -8),
        (9, -7),
    ];
    (CW[k % 8], CCW[(k + 1) % 8])
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

/// Classify an exact direction vector into its 45-degree arc (0..8).
/// Directions exactly on a compass boundary join the arc they open.
pub fn classify_direction(dx: &BigInt, dy: &BigInt) -> usize {
    assert!(!(dx.is_zero_ext() && dy.is_zero_ext()));
    for k in 0..8 {
        let lo = COMPASS[k];
        let hi = COMPASS[(k + 1) % 8];
        // cross(lo, d) >= 0 && cross(d, hi) > 0
        let c1 = BigInt::from(lo.0) * dy - BigInt::from(lo.1) * dx;
        let c2 = dx * BigInt::from(hi.1) - dy * BigInt::from(hi.0);
        let d1 = BigInt::from(lo.0) * dx + BigInt::from(lo.1) * dy;
        if !c1.is_negative() && c2.is_positive() && (c1.is_positive() || d1.is_positive()) {
            return k;
        }
    }
    // Exactly opposite some boundary handling fell through; direction lies on
    // a compass ray: find it and return that arc.
    for k in 0..8 {
        let lo = COMPASS[k];
        let c1 = BigInt::from(lo.0) * dy - BigInt::from(lo.1) * dx;
        let d1 = BigInt::from(lo.0) * dx + BigInt::from(lo.1) * dy;
        if c1.is_zero_ext() && d1.is_positive() {
            return k;
        }
    }
    unreachable!("direction classification");
}

trait ZeroExt {
    fn is_zero_ext(&self) -> bool;
}
impl ZeroExt for BigInt {
    fn is_zero_ext(&self) -> bool {
        use num_traits::Zero;
        self.is_zero()
    }
}

/// A placement within the local grid: two ray apexes and a blue segment.
#[derive(Clone, Copy, Debug)]
pub struct Template {
    pub apex1: (i64, i64),
    pub apex2: (i64, i64),
    pub blue: ((i64, i64), (i64, i64)),
}

const GRID: i64 = 4;

/// Every ray from `apex` with direction strictly inside the arc properly
/// crosses the open blue segment: the arc must fit strictly inside the
/// angular window the segment subtends from the apex.
fn window_covers(apex: (i64, i64), arc: ((i64, i64), (i64, i64)), blue: ((i64, i64), (i64, i64))) -> bool {
    let v1 = (blue.0 .0 - apex.0, blue.0 .1 - apex.1);
    let v2 = (blue.1 .0 - apex.0, blue.1 .1 - apex.1);
    let c = cross(v1, v2);
    if c == 0 {
        return false;
    }
    let (v1, v2) = if c > 0 { (v1, v2) } else { (v2, v1) };
    for d in [arc.0, arc.1] {
        if cross(v1, d) <= 0 || cross(d, v2) <= 0 {
            return false;
        }
    }
    true
}

/// Disjointness certificates for the two ray families.
fn rays_disjoint(
    a1: (i64, i64),
    a2: (i64, i64),
    arc1: ((i64, i64), (i64, i64)),
    arc2: ((i64, i64), (i64, i64)),
    same_side_case: bool,
) -> bool {
    let delta = (a2.0 - a1.0, a2.1 - a1.1);
    if delta == (0, 0) {
        return false;
    }
    // (A) Angular separation: every arc2 direction strictly counterclockwise
    // of every arc1 direction, with apex2 left of all arc1 rays.
    let cert_a = cross(arc1.1, arc2.0) > 0
        && cross(arc1.0, arc2.1) > 0
        && cross(arc1.0, delta) > 0
        && cross(arc1.1, delta) > 0;
    if cert_a {
        return true;
    }
    // (B) Opposite half-planes along some compass axis.
    for e in COMPASS {
        if dot(arc1.0, e) > 0
            && dot(arc1.1, e) > 0
            && dot(arc2.0, e) < 0
            && dot(arc2.1, e) < 0
            && dot(delta, e) < 0
        {
            return true;
        }
    }
    // (C) Same or adjacent arcs: apex2 strictly left of all ray lines of both
    // arcs; valid provided the actual directions keep their angular order,
    // which the final exact validation arbitrates.
    if same_side_case {
        return cross(arc1.0, delta) > 0
            && cross(arc1.1, delta) > 0
            && cross(arc2.0, delta) > 0
            && cross(arc2.1, delta) > 0;
    }
    false
}

/// Search the local grid for a template for canonical arc pair (0, d).
fn search_template(d: usize) -> Option<Template> {
    let arc1 = widened_arc(0);
    let arc2 = widened_arc(d);
    let same_side = d == 0 || d == 1;
    let coords: Vec<(i64, i64)> = (-GRID..=GRID)
        .flat_map(|x| (-GRID..=GRID).map(move |y| (x, y)))
        .collect();
    for &a1 in &coords {
        for &a2 in &coords {
            if a1 == a2 || !rays_disjoint(a1, a2, arc1, arc2, same_side) {
                continue;
            }
            for &b1 in &coords {
                if b1 == a1 || b1 == a2 {
                    continue;
                }
                for &b2 in &coords {
                    if b2 == b1 || b2 == a1 || b2 == a2 {
                        continue;
                    }
                    let blue = (b1, b2);
                    if window_covers(a1, arc1, blue) && window_covers(a2, arc2, blue) {
                        return Some(Template {
                            apex1: a1,
                            apex2: a2,
                            blue,
                        });
                    }
                }
            }
        }
    }
    None
}

/// Template for the canonical arc-pair distance `d` in 0..5, cached.
pub fn find_template(d: usize) -> Option<Template> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Option<Template>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    *guard.entry(d).or_insert_with(|| search_template(d))
}

/// Rotate a local grid point by k * 45 degrees counterclockwise. Odd k scales
/// lengths by sqrt(2), which stays within the disk's grid budget.
pub fn rotate45(p: (i64, i64), k: usize) -> (i64, i64) {
    let mut q = p;
    for _ in 0..(k % 8) / 2 {
        q = (-q.1, q.0);
    }
    if k % 2 == 1 {
        q = (q.0 - q.1, q.0 + q.1);
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates_exist_for_all_classes() {
        for d in 0..=4 {
            let t = find_template(d);
            assert!(t.is_some(), "no template for arc distance {d}");
        }
    }

    #[test]
    fn classify_compass_boundaries() {
        use num_bigint::BigInt;
        let b = |x: i64, y: i64| (BigInt::from(x), BigInt::from(y));
        let (dx, dy) = b(1, 0);
        assert_eq!(classify_direction(&dx, &dy), 0);
        let (dx, dy) = b(1, 1);
        assert_eq!(classify_direction(&dx, &dy), 1);
        let (dx, dy) = b(-3, -4);
        assert_eq!(classify_direction(&dx, &dy), 5);
        let (dx, dy) = b(5, 1);
        assert_eq!(classify_direction(&dx, &dy), 0);
    }

    #[test]
    fn rotation_grid() {
        assert_eq!(rotate45((1, 0), 2), (0, 1));
        assert_eq!(rotate45((1, 0), 1), (1, 1));
        assert_eq!(rotate45((1, 1), 1), (0, 2));
        assert_eq!(rotate45((1, 0), 4), (-1, 0));
    }
}

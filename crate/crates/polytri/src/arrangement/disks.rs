//! Guide disks: two per edge (at 2/5 and 3/5 along it) and three per vertex
//! (on approximate wedge bisectors), with a common exact rational radius
//! found by halving until every separation constraint verifies exactly.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArrangementError;
use crate::geometry::{dir_in_wedge, Point, RationalPoint};
use crate::graph::GridDrawing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiskKind {
    /// On edge (u, v) at parameter 2/5 (near u) or 3/5 (parameter measured
    /// from u); `near` is the endpoint the disk sits closer to.
    Edge { u: usize, v: usize, near: usize },
    /// Near vertex `v`, inside the wedge between rotation-consecutive
    /// neighbors `a` then `b` (counterclockwise).
    Vertex { v: usize, a: usize, b: usize },
}

#[derive(Clone, Debug)]
pub struct GuideDisk {
    pub center: RationalPoint,
    pub kind: DiskKind,
}

fn ratio(n: i128, d: i128) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rp(p: Point) -> RationalPoint {
    p.to_rational()
}

/// Lower bound on sqrt(r) as an exact rational with 2^-24 relative slack.
fn rational_sqrt_lower(r: &BigRational) -> BigRational {
    assert!(!r.is_negative());
    let scale = BigInt::from(1u64 << 24);
    let scaled = (r * BigRational::from(&scale * &scale)).floor();
    let s: BigUint = scaled.numer().magnitude().sqrt();
    BigRational::new(BigInt::from(s), scale)
}

/// Squared distance from rational point to the segment (a, b).
pub fn dist2_point_segment(p: &RationalPoint, a: Point, b: Point) -> BigRational {
    let ax = BigRational::from(BigInt::from(a.x));
    let ay = BigRational::from(BigInt::from(a.y));
    let ux = BigRational::from(BigInt::from(b.x - a.x));
    let uy = BigRational::from(BigInt::from(b.y - a.y));
    let px = &p.x - &ax;
    let py = &p.y - &ay;
    let len2 = &ux * &ux + &uy * &uy;
    let t = (&px * &ux + &py * &uy) / &len2;
    if t <= BigRational::zero() {
        &px * &px + &py * &py
    } else if t >= BigRational::one() {
        let qx = &px - &ux;
        let qy = &py - &uy;
        &qx * &qx + &qy * &qy
    } else {
        let cr = &px * &uy - &py * &ux;
        &cr * &cr / &len2
    }
}

/// Squared distance from rational point to the full line through (a, b).
fn dist2_point_line(p: &RationalPoint, a: Point, b: Point) -> BigRational {
    let ax = BigRational::from(BigInt::from(a.x));
    let ay = BigRational::from(BigInt::from(a.y));
    let ux = BigRational::from(BigInt::from(b.x - a.x));
    let uy = BigRational::from(BigInt::from(b.y - a.y));
    let px = &p.x - &ax;
    let py = &p.y - &ay;
    let len2 = &ux * &ux + &uy * &uy;
    let cr = &px * &uy - &py * &ux;
    &cr * &cr / &len2
}

/// Minimum squared distance from vertex `v` to any other vertex or
/// non-incident edge of the drawing.
fn min_clearance2(d: &GridDrawing, v: usize) -> BigRational {
    let pv = rp(d.points[v]);
    let mut best: Option<BigRational> = None;
    let mut upd = |x: BigRational| {
        if best.as_ref().map_or(true, |b| &x < b) {
            best = Some(x);
        }
    };
    for (w, &pw) in d.points.iter().enumerate() {
        if w != v {
            upd(pv.dist2(&rp(pw)));
        }
    }
    for &(a, b) in d.graph.edges() {
        if a == v || b == v {
            continue;
        }
        upd(dist2_point_segment(&pv, d.points[a], d.points[b]));
    }
    best.expect("drawing has at least two vertices")
}

/// Counterclockwise angular order of the neighbors of each vertex.
pub fn rotations(d: &GridDrawing) -> Vec<Vec<usize>> {
    let n = d.points.len();
    let mut rot = vec![Vec::new(); n];
    for (v, r) in rot.iter_mut().enumerate() {
        let pv = d.points[v];
        let mut nbrs: Vec<usize> = d.graph.adj()[v].clone();
        let half = |(x, y): (i128, i128)| y < 0 || (y == 0 && x < 0);
        nbrs.sort_by(|&a, &b| {
            let da = d.points[a].sub(pv);
            let db = d.points[b].sub(pv);
            match half(da).cmp(&half(db)) {
                std::cmp::Ordering::Equal => {
                    let cr = da.0 * db.1 - da.1 * db.0;
                    cr.cmp(&0).reverse()
                }
                o => o,
            }
        });
        *r = nbrs;
    }
    rot
}

/// Place all guide disks and find a radius satisfying, exactly: disks are
/// pairwise disjoint; a disk meets no edge or vertex other than its own
/// edge; and no line can stab both disks of an edge plus a wedge disk in a
/// wedge bounded by that edge.
pub fn place_guide_disks(
    d: &GridDrawing,
) -> Result<(Vec<GuideDisk>, BigRational), ArrangementError> {
    let mut disks = Vec::new();
    for &(u, v) in d.graph.edges() {
        for (num, near) in [(2i128, u), (3i128, v)] {
            let t = ratio(num, 5);
            let pu = rp(d.points[u]);
            let pv = rp(d.points[v]);
            let center = RationalPoint::new(
                &pu.x + (&pv.x - &pu.x) * &t,
                &pu.y + (&pv.y - &pu.y) * &t,
            );
            disks.push(GuideDisk {
                center,
                kind: DiskKind::Edge { u, v, near },
            });
        }
    }
    let rot = rotations(d);
    for v in 0..d.points.len() {
        let clearance2 = min_clearance2(d, v);
        let reach = rational_sqrt_lower(&(clearance2 / BigRational::from(BigInt::from(25))));
        let nbrs = &rot[v];
        for i in 0..nbrs.len() {
            let a = nbrs[i];
            let b = nbrs[(i + 1) % nbrs.len()];
            let da = d.points[a].sub(d.points[v]);
            let db = d.points[b].sub(d.points[v]);
            let la = BigInt::from((da.0 * da.0 + da.1 * da.1).sqrt());
            let lb = BigInt::from((db.0 * db.0 + db.1 * db.1).sqrt());
            let mut bx = BigInt::from(da.0) * &lb + BigInt::from(db.0) * &la;
            let mut by = BigInt::from(da.1) * &lb + BigInt::from(db.1) * &la;
            let cr = da.0 * db.1 - da.1 * db.0;
            if cr < 0 {
                bx = -bx;
                by = -by;
            } else if cr == 0 {
                // Straight wedge: use the left normal of the first edge.
                bx = BigInt::from(-da.1);
                by = BigInt::from(da.0);
            }
            let bis = (
                bx.to_i128().ok_or_else(|| {
                    ArrangementError::ConstructionInvalid("bisector overflow".into())
                })?,
                by.to_i128().ok_or_else(|| {
                    ArrangementError::ConstructionInvalid("bisector overflow".into())
                })?,
            );
            if !dir_in_wedge(da, db, bis) {
                return Err(ArrangementError::ConstructionInvalid(format!(
                    "bisector outside wedge at vertex {v}"
                )));
            }
            let blen2 = BigRational::from(BigInt::from(bis.0 * bis.0 + bis.1 * bis.1));
            let inv = &reach / rational_sqrt_lower(&blen2).max(BigRational::one());
            // Conservative shrink keeps the center well inside the wedge.
            let s = inv * ratio(1, 2);
            let pv = rp(d.points[v]);
            let center = RationalPoint::new(
                &pv.x + BigRational::from(BigInt::from(bis.0)) * &s,
                &pv.y + BigRational::from(BigInt::from(bis.1)) * &s,
            );
            disks.push(GuideDisk {
                center,
                kind: DiskKind::Vertex { v, a, b },
            });
        }
    }

    // Halving search for the common radius.
    let mut rho = BigRational::one();
    for _ in 0..256 {
        if disks_ok(d, &disks, &rho) {
            return Ok((disks, rho));
        }
        rho /= BigRational::from(BigInt::from(2));
    }
    Err(ArrangementError::ConstructionInvalid(
        "no guide-disk radius found".into(),
    ))
}

fn disks_ok(d: &GridDrawing, disks: &[GuideDisk], rho: &BigRational) -> bool {
    let rho2 = rho * rho;
    let four_rho2 = &rho2 * BigRational::from(BigInt::from(4));
    // Pairwise disjoint.
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            if disks[i].center.dist2(&disks[j].center) <= four_rho2 {
                return false;
            }
        }
    }
    // Clear of non-owning edges and all vertices.
    for disk in disks {
        for (w, &pw) in d.points.iter().enumerate() {
            let _ = w;
            if disk.center.dist2(&rp(pw)) <= rho2 {
                return false;
            }
        }
        for &(a, b) in d.graph.edges() {
            if let DiskKind::Edge { u, v, .. } = disk.kind {
                if (a, b) == (u, v) || (a, b) == (v, u) {
                    continue;
                }
            }
            if dist2_point_segment(&disk.center, d.points[a], d.points[b]) <= rho2 {
                return false;
            }
        }
    }
    // No line through both edge disks of an edge and an adjacent wedge disk:
    // conservatively, the wedge-disk center must sit far enough off the edge
    // line relative to its along-edge overhang.
    for &(u, v) in d.graph.edges() {
        let c1 = edge_disk_center(d, disks, u, v, u);
        let c2 = edge_disk_center(d, disks, u, v, v);
        for disk in disks {
            let DiskKind::Vertex { v: w, a, b } = &disk.kind else {
                continue;
            };
            let other = if *w == u {
                v
            } else if *w == v {
                u
            } else {
                continue;
            };
            if *a != other && *b != other {
                // Wedge not bounded by this edge.
                continue;
            }
            let h2 = dist2_point_line(&disk.center, d.points[u], d.points[v]);
            // Projection parameter onto the chord c1 -> c2.
            let ux = &c2.x - &c1.x;
            let uy = &c2.y - &c1.y;
            let px = &disk.center.x - &c1.x;
            let py = &disk.center.y - &c1.y;
            let len2 = &ux * &ux + &uy * &uy;
            let t = (&px * &ux + &py * &uy) / &len2;
            let overhang = t.abs().max((BigRational::one() - &t).abs());
            let factor = BigRational::from(BigInt::from(2))
                + BigRational::from(BigInt::from(4)) * overhang;
            if h2 <= &rho2 * &factor * &factor {
                return false;
            }
        }
    }
    true
}

fn edge_disk_center(
    d: &GridDrawing,
    disks: &[GuideDisk],
    u: usize,
    v: usize,
    near: usize,
) -> RationalPoint {
    let _ = d;
    disks
        .iter()
        .find_map(|disk| match &disk.kind {
            DiskKind::Edge {
                u: du,
                v: dv,
                near: dn,
            } if ((*du == u && *dv == v) || (*du == v && *dv == u)) && *dn == near => {
                Some(disk.center.clone())
            }
            _ => None,
        })
        .expect("edge disk present")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{k4, prism, straight_line_draw, validate_graph};

    #[test]
    fn k4_disk_counts() {
        let g = validate_graph(&k4()).unwrap();
        let d = straight_line_draw(&g).unwrap();
        let (disks, rho) = place_guide_disks(&d).unwrap();
        assert_eq!(disks.len(), 6 * 2 + 4 * 3);
        assert!(rho > BigRational::zero());
    }

    #[test]
    fn prism_disk_counts() {
        let g = validate_graph(&prism()).unwrap();
        let d = straight_line_draw(&g).unwrap();
        let (disks, _) = place_guide_disks(&d).unwrap();
        assert_eq!(disks.len(), 9 * 2 + 6 * 3);
    }
}

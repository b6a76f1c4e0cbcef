//! Red-blue segment arrangements: the data model and validator, alternating
//! cycle decomposition, maximum non-crossing subset counting, and the
//! construction that turns a planar cubic graph drawing into an arrangement.

mod build;
mod disks;
mod templates;

pub use build::{build_arrangement, BuildReport};
pub use disks::{place_guide_disks, DiskKind, GuideDisk};
pub use templates::{classify_direction, find_template, widened_arc, Template};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::geometry::{
    crossing_parameter, crossing_point, properly_cross, segments_touch, Point, RationalPoint,
    Segment,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColoredSegment {
    pub segment: Segment,
    pub color: Color,
    pub id: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("improper crossing: {0}")]
    ImproperCrossing(String),
    #[error("blue segment {0} crossed {1} times (want exactly two reds)")]
    WrongBlueDegree(usize, usize),
    #[error("red segment {0}: {1}")]
    WrongRedDegreeOrOrder(usize, String),
    #[error("arrangement is disconnected")]
    Disconnected,
    #[error("construction invalid after rescaling: {0}")]
    ConstructionInvalid(String),
    #[error("too large for brute force: {0}")]
    TooLarge(String),
}

/// A validated red-blue arrangement with its cached crossing structure.
#[derive(Clone, Debug)]
pub struct Arrangement {
    segments: Vec<ColoredSegment>,
    crossings: Vec<(usize, usize)>,
}

impl Arrangement {
    pub fn segments(&self) -> &[ColoredSegment] {
        &self.segments
    }

    /// Properly crossing pairs, each listed once with the smaller id first.
    pub fn crossings(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    pub fn red_count(&self) -> usize {
        self.segments.iter().filter(|s| s.color == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.segments.len() - self.red_count()
    }

    /// Crossings of one segment, ordered along it, as (other id, parameter).
    pub fn crossings_along(&self, id: usize) -> Vec<(usize, BigRational)> {
        let s = &self.segments[id].segment;
        let mut v: Vec<(usize, BigRational)> = self
            .crossings
            .iter()
            .filter_map(|&(a, b)| {
                let other = if a == id {
                    b
                } else if b == id {
                    a
                } else {
                    return None;
                };
                let t = crossing_parameter(s, &self.segments[other].segment).unwrap();
                Some((other, t))
            })
            .collect();
        v.sort_by(|x, y| x.1.cmp(&y.1));
        v
    }

    /// Red-red crossing pairs (a perfect matching on red segments).
    pub fn red_red_pairs(&self) -> Vec<(usize, usize)> {
        self.crossings
            .iter()
            .copied()
            .filter(|&(a, b)| {
                self.segments[a].color == Color::Red && self.segments[b].color == Color::Red
            })
            .collect()
    }
}

/// Validate the four defining clauses; returns the first violation.
pub fn validate_arrangement(segments: Vec<ColoredSegment>) -> Result<Arrangement, ArrangementError> {
    let n = segments.len();
    let mut crossings = Vec::new();
    let mut points: Vec<(RationalPoint, usize, usize)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (&segments[i].segment, &segments[j].segment);
            if properly_cross(a, b) {
                crossings.push((i, j));
                points.push((crossing_point(a, b).unwrap(), i, j));
            } else if segments_touch(a, b) {
                return Err(ArrangementError::ImproperCrossing(format!(
                    "segments {i} and {j} touch without properly crossing"
                )));
            }
        }
    }
    // No two crossing pairs share a point (no triple points).
    for x in 0..points.len() {
        for y in (x + 1)..points.len() {
            if points[x].0 == points[y].0 {
                return Err(ArrangementError::ImproperCrossing(format!(
                    "crossing point shared by pairs ({}, {}) and ({}, {})",
                    points[x].1, points[x].2, points[y].1, points[y].2
                )));
            }
        }
    }
    let arr = Arrangement {
        segments,
        crossings,
    };
    // Blue degree: exactly two crossings, both red.
    for (i, s) in arr.segments.iter().enumerate() {
        if s.color != Color::Blue {
            continue;
        }
        let along = arr.crossings_along(i);
        if along.len() != 2 {
            return Err(ArrangementError::WrongBlueDegree(i, along.len()));
        }
        for (other, _) in &along {
            if arr.segments[*other].color != Color::Red {
                return Err(ArrangementError::WrongBlueDegree(i, along.len()));
            }
        }
    }
    // Red degree and order: exactly blue-red-blue along the segment.
    for (i, s) in arr.segments.iter().enumerate() {
        if s.color != Color::Red {
            continue;
        }
        let along = arr.crossings_along(i);
        if along.len() != 3 {
            return Err(ArrangementError::WrongRedDegreeOrOrder(
                i,
                format!("crossed {} times", along.len()),
            ));
        }
        let colors: Vec<Color> = along.iter().map(|(o, _)| arr.segments[*o].color).collect();
        if colors != [Color::Blue, Color::Red, Color::Blue] {
            return Err(ArrangementError::WrongRedDegreeOrOrder(
                i,
                format!("crossing colors along segment are {:?}", colors),
            ));
        }
    }
    // Connected union: crossings connect all segments.
    if n > 0 {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut cnt = 1;
        while let Some(u) = stack.pop() {
            for &(a, b) in &arr.crossings {
                let w = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    cnt += 1;
                    stack.push(w);
                }
            }
        }
        if cnt != n {
            return Err(ArrangementError::Disconnected);
        }
    }
    Ok(arr)
}

/// Cycles of the bichromatic-crossing graph; each alternates red and blue.
#[derive(Clone, Debug)]
pub struct AlternatingCycles {
    pub cycles: Vec<Vec<usize>>,
}

pub fn alternating_cycles(arr: &Arrangement) -> AlternatingCycles {
    let n = arr.segments.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &arr.crossings {
        if arr.segments[a].color != arr.segments[b].color {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        debug_assert_eq!(adj[s].len(), 2, "bichromatic degree must be 2");
        let mut cyc = vec![s];
        seen[s] = true;
        let mut prev = s;
        let mut cur = adj[s][0];
        while cur != s {
            seen[cur] = true;
            cyc.push(cur);
            let nxt = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = nxt;
        }
        cycles.push(cyc);
    }
    AlternatingCycles { cycles }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxNoncrossing {
    pub max_size: usize,
    pub total: BigUint,
    /// Counts of maximum subsets keyed by their number of red segments.
    pub histogram: BTreeMap<usize, BigUint>,
}

/// Count the maximum-size non-crossing subsets by enumerating monochromatic
/// colorings of the alternating cycles and filtering out red-red conflicts.
pub fn count_max_noncrossing(
    arr: &Arrangement,
    cycle_cap: usize,
) -> Result<MaxNoncrossing, ArrangementError> {
    let decomp = alternating_cycles(arr);
    let cycles = &decomp.cycles;
    if cycles.len() > cycle_cap {
        return Err(ArrangementError::TooLarge(format!(
            "{} alternating cycles exceed cap {}",
            cycles.len(),
            cycle_cap
        )));
    }
    let n_red = arr.red_count();
    let mut cycle_of = vec![usize::MAX; arr.segments.len()];
    let mut reds_in_cycle = vec![0usize; cycles.len()];
    for (ci, c) in cycles.iter().enumerate() {
        for &s in c {
            cycle_of[s] = ci;
            if arr.segments[s].color == Color::Red {
                reds_in_cycle[ci] += 1;
            }
        }
    }
    // Red-red conflicts between (or within) cycles.
    let rr: Vec<(usize, usize)> = arr
        .red_red_pairs()
        .iter()
        .map(|&(a, b)| (cycle_of[a], cycle_of[b]))
        .collect();
    let mut total = BigUint::zero();
    let mut histogram: BTreeMap<usize, BigUint> = BTreeMap::new();
    for mask in 0u64..(1 << cycles.len()) {
        let red_chosen = |c: usize| mask & (1 << c) != 0;
        if rr.iter().any(|&(c1, c2)| red_chosen(c1) && red_chosen(c2)) {
            continue;
        }
        let reds: usize = (0..cycles.len())
            .filter(|&c| red_chosen(c))
            .map(|c| reds_in_cycle[c])
            .sum();
        total += 1u32;
        *histogram.entry(reds).or_insert_with(BigUint::zero) += 1u32;
    }
    Ok(MaxNoncrossing {
        max_size: n_red,
        total,
        histogram,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteforceNoncrossing {
    pub total_noncrossing: BigUint,
    pub max_size: usize,
    pub max_count: BigUint,
    pub max_histogram: BTreeMap<usize, BigUint>,
}

/// Independent oracle over all 2^|A| subsets of raw colored segments; counts
/// non-crossing subsets and the maximum-size ones.
pub fn count_noncrossing_subsets_bruteforce(
    segments: &[ColoredSegment],
) -> Result<BruteforceNoncrossing, ArrangementError> {
    let n = segments.len();
    if n > 20 {
        return Err(ArrangementError::TooLarge(format!("{n} segments")));
    }
    let mut conflict = vec![0u64; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if properly_cross(&segments[i].segment, &segments[j].segment) {
                conflict[i] |= 1 << j;
                conflict[j] |= 1 << i;
            }
        }
    }
    let mut total = 0u64;
    let mut max_size = 0usize;
    let mut max_count = 0u64;
    let mut max_histogram: BTreeMap<usize, u64> = BTreeMap::new();
    'subsets: for s in 0u64..(1 << n) {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if conflict[v] & s != 0 {
                continue 'subsets;
            }
            rest &= rest - 1;
        }
        total += 1;
        let size = s.count_ones() as usize;
        let reds = (0..n)
            .filter(|&i| s & (1 << i) != 0 && segments[i].color == Color::Red)
            .count();
        match size.cmp(&max_size) {
            std::cmp::Ordering::Greater => {
                max_size = size;
                max_count = 1;
                max_histogram = BTreeMap::from([(reds, 1u64)]);
            }
            std::cmp::Ordering::Equal => {
                max_count += 1;
                *max_histogram.entry(reds).or_insert(0) += 1;
            }
            std::cmp::Ordering::Less => {}
        }
    }
    Ok(BruteforceNoncrossing {
        total_noncrossing: BigUint::from(total),
        max_size,
        max_count: BigUint::from(max_count),
        max_histogram: max_histogram
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect(),
    })
}

/// The minimal valid red-blue arrangement: two crossing reds and two blues.
pub fn x_fixture() -> Vec<ColoredSegment> {
    let seg = |a: (i64, i64), b: (i64, i64)| {
        Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1)).unwrap()
    };
    vec![
        ColoredSegment {
            segment: seg((0, 0), (8, 8)),
            color: Color::Red,
            id: 0,
        },
        ColoredSegment {
            segment: seg((0, 8), (8, 0)),
            color: Color::Red,
            id: 1,
        },
        ColoredSegment {
            segment: seg((0, 2), (8, 2)),
            color: Color::Blue,
            id: 2,
        },
        ColoredSegment {
            segment: seg((0, 6), (8, 6)),
            color: Color::Blue,
            id: 3,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_fixture_valid() {
        let arr = validate_arrangement(x_fixture()).unwrap();
        assert_eq!(arr.red_count(), 2);
        assert_eq!(arr.blue_count(), 2);
        assert_eq!(arr.crossings().len(), 5);
    }

    #[test]
    fn missing_blue_breaks_red_degree() {
        let mut segs = x_fixture();
        segs.pop();
        match validate_arrangement(segs).unwrap_err() {
            ArrangementError::WrongRedDegreeOrOrder(_, _) => {}
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn two_copies_disconnected() {
        let mut segs = x_fixture();
        let shift = 100;
        let m = segs.len();
        for s in segs.clone() {
            segs.push(ColoredSegment {
                segment: Segment::new(
                    Point::new(s.segment.p.x + shift, s.segment.p.y),
                    Point::new(s.segment.q.x + shift, s.segment.q.y),
                )
                .unwrap(),
                color: s.color,
                id: s.id + m,
            });
        }
        assert_eq!(
            validate_arrangement(segs).unwrap_err(),
            ArrangementError::Disconnected
        );
    }

    #[test]
    fn x_alternating_cycle() {
        let arr = validate_arrangement(x_fixture()).unwrap();
        let d = alternating_cycles(&arr);
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.cycles[0].len(), 4);
    }

    #[test]
    fn x_max_noncrossing() {
        let arr = validate_arrangement(x_fixture()).unwrap();
        let m = count_max_noncrossing(&arr, 24).unwrap();
        assert_eq!(m.max_size, 2);
        assert_eq!(m.total, BigUint::from(1u32));
        assert_eq!(m.histogram.get(&0), Some(&BigUint::from(1u32)));
        // Oracle agreement.
        let bf = count_noncrossing_subsets_bruteforce(arr.segments()).unwrap();
        assert_eq!(bf.max_size, 2);
        assert_eq!(bf.max_count, m.total);
        assert_eq!(bf.max_histogram, m.histogram);
    }

    #[test]
    fn bruteforce_tiny_cases() {
        let seg = |a: (i64, i64), b: (i64, i64)| {
            Segment::new(Point::new(a.0, a.1), Point::new(b.0, b.1)).unwrap()
        };
        // A single crossing red-blue pair (not a valid arrangement, raw oracle).
        let pair = vec![
            ColoredSegment {
                segment: seg((0, 0), (2, 2)),
                color: Color::Red,
                id: 0,
            },
            ColoredSegment {
                segment: seg((0, 2), (2, 0)),
                color: Color::Blue,
                id: 1,
            },
        ];
        let r = count_noncrossing_subsets_bruteforce(&pair).unwrap();
        assert_eq!(r.max_size, 1);
        assert_eq!(r.max_count, BigUint::from(2u32));
        // Three pairwise-crossing segments.
        let three = vec![
            ColoredSegment {
                segment: seg((0, 0), (4, 4)),
                color: Color::Red,
                id: 0,
            },
            ColoredSegment {
                segment: seg((0, 4), (4, 0)),
                color: Color::Red,
                id: 1,
            },
            ColoredSegment {
                segment: seg((0, 2), (4, 2)),
                color: Color::Blue,
                id: 2,
            },
        ];
        let r = count_noncrossing_subsets_bruteforce(&three).unwrap();
        assert_eq!(r.max_size, 1);
        assert_eq!(r.max_count, BigUint::from(3u32));
    }
}

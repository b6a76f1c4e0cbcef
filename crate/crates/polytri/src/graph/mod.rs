//! Input-graph validation, planar straight-line grid drawings, and the
//! brute-force independent-set oracle.

mod draw;
mod fixtures;
mod indsets;
mod planarity;

pub use draw::straight_line_draw;
pub use fixtures::{cube_q3, k4, k5, path3, prism};
pub use indsets::{count_independent_sets, count_vertex_covers, independent_set_histogram};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{properly_cross, on_segment, Point, Segment};

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("graph is not 3-regular: vertex {0} has degree {1}")]
    NotCubic(usize, usize),
    #[error("graph too large for brute force: {0} vertices exceeds cap {1}")]
    TooLarge(usize, usize),
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("drawing requires a biconnected graph")]
    NotBiconnected,
    #[error("drawing construction failed: {0}")]
    DrawingFailed(String),
}

/// Raw undirected graph input: vertices 0..n-1, edges listed once.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GraphInput {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// A validated connected 3-regular planar graph.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PlanarGraph3 {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PlanarGraph3 {
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adj(&self) -> &[Vec<usize>] {
        &self.adj
    }
}

fn build_adj(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, GraphError> {
    let mut adj = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::Malformed(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(GraphError::Malformed(format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::Malformed(format!("duplicate edge ({u},{v})")));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    Ok(adj)
}

fn is_connected(n: usize, adj: &[Vec<usize>]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut cnt = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                cnt += 1;
                stack.push(v);
            }
        }
    }
    cnt == n
}

/// Validate a candidate input: connected, planar, 3-regular (in that order,
/// so a non-planar graph is reported as such even if it is also irregular).
pub fn validate_graph(input: &GraphInput) -> Result<PlanarGraph3, GraphError> {
    let adj = build_adj(input.n, &input.edges)?;
    if !is_connected(input.n, &adj) {
        return Err(GraphError::NotConnected);
    }
    if !planarity::is_planar(input.n, &adj) {
        return Err(GraphError::NotPlanar);
    }
    for (v, nbrs) in adj.iter().enumerate() {
        if nbrs.len() != 3 {
            return Err(GraphError::NotCubic(v, nbrs.len()));
        }
    }
    Ok(PlanarGraph3 {
        n: input.n,
        edges: input.edges.clone(),
        adj,
    })
}

/// A planar straight-line drawing of a graph on the integer grid.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridDrawing {
    pub graph: PlanarGraph3,
    pub points: Vec<Point>,
}

impl GridDrawing {
    /// Side of the smallest axis-aligned bounding square.
    pub fn grid_side(&self) -> i64 {
        let xs: Vec<i64> = self.points.iter().map(|p| p.x).collect();
        let ys: Vec<i64> = self.points.iter().map(|p| p.y).collect();
        let w = xs.iter().max().unwrap() - xs.iter().min().unwrap();
        let h = ys.iter().max().unwrap() - ys.iter().min().unwrap();
        w.max(h)
    }

    pub fn segment(&self, e: (usize, usize)) -> Segment {
        Segment::new(self.points[e.0], self.points[e.1]).unwrap()
    }

    /// Exact check that the drawing is a plane straight-line embedding:
    /// distinct vertices, no edge crossings, no vertex interior to an edge.
    pub fn validate(&self) -> Result<(), GraphError> {
        let pts = &self.points;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if pts[i] == pts[j] {
                    return Err(GraphError::DrawingFailed(format!(
                        "vertices {i} and {j} coincide"
                    )));
                }
            }
        }
        let edges = self.graph.edges();
        for (i, &e) in edges.iter().enumerate() {
            let s = self.segment(e);
            for &f in edges.iter().skip(i + 1) {
                if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                    continue;
                }
                if properly_cross(&s, &self.segment(f)) {
                    return Err(GraphError::DrawingFailed(format!(
                        "edges {:?} and {:?} cross",
                        e, f
                    )));
                }
            }
            for (v, &p) in pts.iter().enumerate() {
                if v != e.0 && v != e.1 && on_segment(s.p, s.q, p) {
                    return Err(GraphError::DrawingFailed(format!(
                        "vertex {v} lies on edge {:?}",
                        e
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_valid() {
        let g = validate_graph(&k4()).unwrap();
        assert_eq!(g.num_vertices(), 4);
    }

    #[test]
    fn k5_not_planar() {
        assert_eq!(validate_graph(&k5()).unwrap_err(), GraphError::NotPlanar);
    }

    #[test]
    fn path_not_cubic() {
        match validate_graph(&path3()).unwrap_err() {
            GraphError::NotCubic(_, _) => {}
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn disconnected_rejected() {
        // Two disjoint K4 copies.
        let mut edges = k4().edges;
        edges.extend(k4().edges.iter().map(|&(u, v)| (u + 4, v + 4)));
        let input = GraphInput { n: 8, edges };
        assert_eq!(validate_graph(&input).unwrap_err(), GraphError::NotConnected);
    }

    #[test]
    fn prism_and_cube_valid() {
        assert!(validate_graph(&prism()).is_ok());
        assert!(validate_graph(&cube_q3()).is_ok());
    }
}

use rayon::prelude::*;

use super::polygon::{PolygonWithHoles, VertexId};

/// Precomputed pairwise visibility for a polygon: boundary edges and clean
/// interior diagonals. The computation is exact and embarrassingly parallel
/// over vertex pairs.
pub struct CleanMatrix {
    n: usize,
    vis: Vec<bool>,
    edge: Vec<bool>,
}

impl CleanMatrix {
    pub fn compute(poly: &PolygonWithHoles) -> Self {
        let n = poly.num_vertices();
        let mut edge = vec![false; n * n];
        for (a, b) in poly.all_edges() {
            edge[a * n + b] = true;
            edge[b * n + a] = true;
        }
        let rows: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|a| {
                let mut row = vec![false; n];
                for b in (a + 1)..n {
                    row[b] = edge[a * n + b] || poly.clean_diagonal(a, b);
                }
                row
            })
            .collect();
        let mut vis = vec![false; n * n];
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v {
                    vis[a * n + b] = true;
                    vis[b * n + a] = true;
                }
            }
        }
        CleanMatrix { n, vis, edge }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Boundary edge or clean diagonal.
    pub fn visible(&self, a: VertexId, b: VertexId) -> bool {
        self.vis[a * self.n + b]
    }

    pub fn is_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge[a * self.n + b]
    }

    /// Clean interior diagonal (not a boundary edge).
    pub fn diagonal(&self, a: VertexId, b: VertexId) -> bool {
        self.vis[a * self.n + b] && !self.edge[a * self.n + b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point::pt;

    #[test]
    fn matrix_matches_direct() {
        let l = vec![pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)];
        let p = PolygonWithHoles::simple(l).unwrap();
        let m = CleanMatrix::compute(&p);
        for a in 0..p.num_vertices() {
            for b in 0..p.num_vertices() {
                if a != b {
                    assert_eq!(m.visible(a, b), p.visible(a, b), "pair ({a},{b})");
                }
            }
        }
    }
}

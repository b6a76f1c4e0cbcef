//! Planar straight-line grid drawing: combinatorial embedding, star
//! triangulation of large faces, canonical ordering, and the incremental
//! shift placement. Coordinates are integers on a grid of side O(|V|).

use std::collections::{HashMap, HashSet};

use super::planarity::{biconnected_components, planar_embedding};
use super::{GraphError, GridDrawing, PlanarGraph3};
use crate::geometry::Point;

pub fn straight_line_draw(g: &PlanarGraph3) -> Result<GridDrawing, GraphError> {
    let n = g.num_vertices();
    let blocks = biconnected_components(n, g.adj());
    if blocks.len() != 1 || blocks[0].len() != n {
        return Err(GraphError::NotBiconnected);
    }
    let faces = planar_embedding(n, g.adj()).ok_or(GraphError::NotPlanar)?;

    // Star-triangulate every face with more than three sides. The extra
    // apex vertices are dropped from the final drawing.
    let mut total = n;
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut adj: Vec<HashSet<usize>> = vec![HashSet::new(); n];
    for (u, nbrs) in g.adj().iter().enumerate() {
        for &v in nbrs {
            adj[u].insert(v);
        }
    }
    for face in &faces {
        if face.len() == 3 {
            triangles.push([face[0], face[1], face[2]]);
        } else {
            let s = total;
            total += 1;
            adj.push(HashSet::new());
            for i in 0..face.len() {
                let (a, b) = (face[i], face[(i + 1) % face.len()]);
                triangles.push([s, a, b]);
                adj[s].insert(a);
                adj[a].insert(s);
            }
        }
    }

    let rotations = consistent_rotations(total, &triangles)
        .ok_or_else(|| GraphError::DrawingFailed("rotation system".into()))?;
    let order = canonical_order(total, &adj, &rotations, &triangles[0])?;
    let pos = shift_place(total, &adj, &order)?;

    let drawing = GridDrawing {
        graph: g.clone(),
        points: pos[..n].to_vec(),
    };
    drawing.validate()?;
    Ok(drawing)
}

/// Orient all triangles consistently (sphere orientation) and read off the
/// cyclic neighbor order around each vertex.
fn consistent_rotations(n: usize, triangles: &[[usize; 3]]) -> Option<Vec<Vec<usize>>> {
    // Orient by breadth-first propagation across shared edges: adjacent
    // triangles must traverse a shared edge in opposite directions.
    let mut oriented: Vec<Option<[usize; 3]>> = vec![None; triangles.len()];
    let mut by_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (t[k], t[(k + 1) % 3]);
            by_edge.entry((a.min(b), a.max(b))).or_default().push(i);
        }
    }
    for v in by_edge.values() {
        if v.len() != 2 {
            return None;
        }
    }
    let mut queue = std::collections::VecDeque::new();
    oriented[0] = Some(triangles[0]);
    queue.push_back(0usize);
    while let Some(i) = queue.pop_front() {
        let t = oriented[i].unwrap();
        for k in 0..3 {
            let (a, b) = (t[k], t[(k + 1) % 3]);
            for &j in &by_edge[&(a.min(b), a.max(b))] {
                if j == i || oriented[j].is_some() {
                    if let Some(tj) = oriented[j] {
                        if j != i && directed_edge_in(&tj, a, b) {
                            return None; // inconsistent orientation
                        }
                    }
                    continue;
                }
                let tj = triangles[j];
                // Neighbor must traverse (b, a).
                let fixed = if directed_edge_in(&tj, b, a) {
                    tj
                } else {
                    [tj[0], tj[2], tj[1]]
                };
                oriented[j] = Some(fixed);
                queue.push_back(j);
            }
        }
    }
    // Rotation at v: successor map y -> z over oriented triangles (v, y, z).
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for t in oriented.iter().map(|t| t.unwrap()) {
        for k in 0..3 {
            let (v, y, z) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
            succ[v].insert(y, z);
        }
    }
    let mut rot = Vec::with_capacity(n);
    for v in 0..n {
        let m = &succ[v];
        if m.is_empty() {
            return None;
        }
        let start = *m.keys().min().unwrap();
        let mut cyc = vec![start];
        let mut cur = m[&start];
        while cur != start {
            if cyc.len() > m.len() {
                return None;
            }
            cyc.push(cur);
            cur = m[&cur];
        }
        if cyc.len() != m.len() {
            return None;
        }
        rot.push(cyc);
    }
    Some(rot)
}

fn directed_edge_in(t: &[usize; 3], a: usize, b: usize) -> bool {
    (0..3).any(|k| t[k] == a && t[(k + 1) % 3] == b)
}

/// Canonical vertex ordering of a maximal planar graph by peeling: repeatedly
/// remove a contour vertex without chords, tracking the contour through each
/// vertex's rotation.
fn canonical_order(
    n: usize,
    adj: &[HashSet<usize>],
    rot: &[Vec<usize>],
    outer: &[usize; 3],
) -> Result<Vec<usize>, GraphError> {
    let (v1, v2, v3) = (outer[0], outer[1], outer[2]);
    let mut alive = vec![true; n];
    let mut contour: Vec<usize> = vec![v1, v3, v2];
    let mut removal: Vec<usize> = Vec::new();
    while removal.len() < n - 2 {
        let mut picked = None;
        'scan: for i in 1..contour.len() - 1 {
            let z = contour[i];
            // No chords: alive contour neighbors of z are exactly the two
            // adjacent contour entries.
            let on_contour: HashSet<usize> = contour.iter().copied().collect();
            for &w in &adj[z] {
                if alive[w] && on_contour.contains(&w) && w != contour[i - 1] && w != contour[i + 1]
                {
                    continue 'scan;
                }
            }
            picked = Some(i);
            break;
        }
        let i = picked.ok_or_else(|| GraphError::DrawingFailed("peeling stuck".into()))?;
        let z = contour[i];
        let (cl, cr) = (contour[i - 1], contour[i + 1]);
        alive[z] = false;
        removal.push(z);
        // Interior fan: the rotation arc at z from cl to cr (one direction)
        // whose alive members replace z on the contour; the other arc must be
        // empty of alive vertices.
        let r = &rot[z];
        let pl = r.iter().position(|&x| x == cl).unwrap();
        let m = r.len();
        let mut arc_a = Vec::new();
        let mut j = (pl + 1) % m;
        while r[j] != cr {
            if alive[r[j]] {
                arc_a.push(r[j]);
            }
            j = (j + 1) % m;
        }
        let pr = j;
        let mut arc_b = Vec::new();
        let mut j = (pr + 1) % m;
        while r[j] != cl {
            if alive[r[j]] {
                arc_b.push(r[j]);
            }
            j = (j + 1) % m;
        }
        let fan = match (arc_a.is_empty(), arc_b.is_empty()) {
            (true, true) => Vec::new(),
            (false, true) => arc_a,
            (true, false) => {
                arc_b.reverse();
                arc_b
            }
            (false, false) => {
                return Err(GraphError::DrawingFailed("ambiguous fan".into()));
            }
        };
        contour.splice(i..=i, fan);
    }
    // Insertion order: v1, v2, then reversed removals.
    let mut order = vec![v1, v2];
    order.extend(removal.iter().rev());
    Ok(order)
}

/// Incremental placement with accumulated shifts; O(n^2), integer exact.
fn shift_place(
    n: usize,
    adj: &[HashSet<usize>],
    order: &[usize],
) -> Result<Vec<Point>, GraphError> {
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut covered: Vec<Vec<usize>> = vec![Vec::new(); n];
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v1] = 0;
    y[v1] = 0;
    x[v2] = 2;
    y[v2] = 0;
    x[v3] = 1;
    y[v3] = 1;
    let mut contour = vec![v1, v3, v2];
    for &vk in &order[3..] {
        // Contiguous run of contour vertices adjacent to vk.
        let idx: Vec<usize> = contour
            .iter()
            .enumerate()
            .filter(|(_, w)| adj[vk].contains(w))
            .map(|(i, _)| i)
            .collect();
        if idx.is_empty() || idx.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(GraphError::DrawingFailed(format!(
                "non-contiguous contour neighbors for vertex {vk}"
            )));
        }
        let (l, r) = (idx[0], *idx.last().unwrap());
        if l == r {
            return Err(GraphError::DrawingFailed(format!(
                "single contour neighbor for vertex {vk}"
            )));
        }
        // Shift: strictly interior neighbors by 1, w_r and beyond by 2.
        let mut shift = |w: usize, d: i64, x: &mut Vec<i64>, covered: &Vec<Vec<usize>>| {
            x[w] += d;
            let mut stack: Vec<usize> = covered[w].clone();
            while let Some(u) = stack.pop() {
                x[u] += d;
                stack.extend(covered[u].iter().copied());
            }
        };
        for &w in &contour[(l + 1)..r] {
            shift(w, 1, &mut x, &covered);
        }
        for &w in &contour[r..] {
            shift(w, 2, &mut x, &covered);
        }
        let (wl, wr) = (contour[l], contour[r]);
        let (x1, y1, x2, y2) = (x[wl], y[wl], x[wr], y[wr]);
        if (x1 + x2 + y2 - y1) % 2 != 0 {
            return Err(GraphError::DrawingFailed("parity broken".into()));
        }
        x[vk] = (x1 + x2 + y2 - y1) / 2;
        y[vk] = (x2 - x1 + y1 + y2) / 2;
        covered[vk] = contour[(l + 1)..r].to_vec();
        contour.splice((l + 1)..r, [vk]);
    }
    Ok((0..n).map(|v| Point::new(x[v], y[v])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cube_q3, k4, prism, validate_graph};

    #[test]
    fn k4_drawing() {
        let g = validate_graph(&k4()).unwrap();
        let d = straight_line_draw(&g).unwrap();
        assert!(d.validate().is_ok());
        assert!(d.grid_side() <= 8, "side = {}", d.grid_side());
    }

    #[test]
    fn prism_drawing() {
        let g = validate_graph(&prism()).unwrap();
        let d = straight_line_draw(&g).unwrap();
        assert!(d.validate().is_ok());
        assert!(d.grid_side() <= 4 * 6, "side = {}", d.grid_side());
    }

    #[test]
    fn cube_drawing() {
        let g = validate_graph(&cube_q3()).unwrap();
        let d = straight_line_draw(&g).unwrap();
        assert!(d.validate().is_ok());
        assert!(d.grid_side() <= 4 * 8, "side = {}", d.grid_side());
    }
}

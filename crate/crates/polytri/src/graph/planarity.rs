//! Planarity testing and combinatorial embedding by incremental face
//! insertion: embed a cycle, then repeatedly route a path of some remaining
//! fragment through a face containing all of its attachment vertices,
//! preferring fragments with a unique admissible face.

use std::collections::{BTreeSet, HashSet, VecDeque};

/// Planarity of an arbitrary graph, block by block.
pub fn is_planar(n: usize, adj: &[Vec<usize>]) -> bool {
    // Quick Euler bound per component is subsumed by the per-block test.
    for block in biconnected_components(n, adj) {
        if block.len() < 3 {
            continue;
        }
        let (bn, badj) = induce(&block, adj);
        if planar_embedding(bn, &badj).is_none() {
            return false;
        }
    }
    true
}

/// Vertex sets of the biconnected components (blocks) with >= 1 edge.
pub fn biconnected_components(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // Iterative DFS to avoid recursion limits.
    #[derive(Clone)]
    struct Frame {
        v: usize,
        parent: usize,
        idx: usize,
    }
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut frames = vec![Frame {
            v: root,
            parent: usize::MAX,
            idx: 0,
        }];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(fr) = frames.last().cloned() {
            if fr.idx < adj[fr.v].len() {
                frames.last_mut().unwrap().idx += 1;
                let w = adj[fr.v][fr.idx];
                if disc[w] == usize::MAX {
                    stack.push((fr.v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push(Frame {
                        v: w,
                        parent: fr.v,
                        idx: 0,
                    });
                } else if w != fr.parent && disc[w] < disc[fr.v] {
                    stack.push((fr.v, w));
                    low[fr.v] = low[fr.v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(pf) = frames.last() {
                    let (p, v) = (pf.v, fr.v);
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // Pop one block.
                        let mut verts = BTreeSet::new();
                        while let Some(&(a, b)) = stack.last() {
                            if disc[a] >= disc[v] || (a == p && b == v) {
                                verts.insert(a);
                                verts.insert(b);
                                stack.pop();
                                if a == p && b == v {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        if !verts.is_empty() {
                            blocks.push(verts.into_iter().collect());
                        }
                    }
                }
            }
        }
    }
    blocks
}

fn induce(verts: &[usize], adj: &[Vec<usize>]) -> (usize, Vec<Vec<usize>>) {
    let mut index = vec![usize::MAX; adj.len()];
    for (i, &v) in verts.iter().enumerate() {
        index[v] = i;
    }
    let mut badj = vec![Vec::new(); verts.len()];
    for (i, &v) in verts.iter().enumerate() {
        for &w in &adj[v] {
            if index[w] != usize::MAX {
                badj[i].push(index[w]);
            }
        }
    }
    (verts.len(), badj)
}

struct Fragment {
    attach: Vec<usize>,
    inner: Vec<usize>,
}

/// Combinatorial embedding of a biconnected graph: the list of face cycles,
/// or None when the graph is not planar.
pub fn planar_embedding(n: usize, adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let m: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    if n >= 3 && m > 3 * n - 6 {
        return None;
    }
    if n < 3 {
        return None;
    }
    let mut in_h = vec![false; n];
    let mut embedded: HashSet<(usize, usize)> = HashSet::new();
    let key = |u: usize, v: usize| (u.min(v), u.max(v));

    // Start with any cycle, found by walking into the DFS tree until a
    // repeat; biconnected graphs with min degree >= 2 always contain one.
    let cycle = find_cycle(n, adj)?;
    for &v in &cycle {
        in_h[v] = true;
    }
    for i in 0..cycle.len() {
        embedded.insert(key(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        let fragments = find_fragments(n, adj, &in_h, &embedded);
        if fragments.is_empty() {
            return Some(faces);
        }
        // Admissible faces per fragment; embed a most-constrained fragment.
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let adm: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    let fset: HashSet<usize> = f.iter().copied().collect();
                    frag.attach.iter().all(|a| fset.contains(a))
                })
                .map(|(i, _)| i)
                .collect();
            if adm.is_empty() {
                return None;
            }
            let better = match &best {
                None => true,
                Some((_, cur)) => adm.len() < cur.len(),
            };
            if better {
                best = Some((fi, adm));
            }
        }
        let (fi, adm) = best.unwrap();
        let frag = &fragments[fi];
        let path = fragment_path(adj, &in_h, frag)?;
        let face_idx = adm[0];
        let face = faces.swap_remove(face_idx);
        let a = *path.first().unwrap();
        let b = *path.last().unwrap();
        let ia = face.iter().position(|&x| x == a)?;
        let ib = face.iter().position(|&x| x == b)?;
        let fl = face.len();
        // Face parts strictly between the attachments, in walk order.
        let mut part_ab = Vec::new();
        let mut i = (ia + 1) % fl;
        while i != ib {
            part_ab.push(face[i]);
            i = (i + 1) % fl;
        }
        let mut part_ba = Vec::new();
        let mut i = (ib + 1) % fl;
        while i != ia {
            part_ba.push(face[i]);
            i = (i + 1) % fl;
        }
        // New faces: path + remainder on each side.
        let mut f1: Vec<usize> = path.clone();
        f1.extend(part_ba.iter().copied());
        let mut f2: Vec<usize> = path.iter().rev().copied().collect();
        f2.extend(part_ab.iter().copied());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            embedded.insert(key(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }
}

fn find_cycle(n: usize, adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    let mut stack = vec![0usize];
    state[0] = 1;
    while let Some(&u) = stack.last() {
        let mut advanced = false;
        for &v in &adj[u] {
            if v == parent[u] {
                continue;
            }
            if state[v] == 0 {
                parent[v] = u;
                state[v] = 1;
                stack.push(v);
                advanced = true;
                break;
            } else if state[v] == 1 {
                // Back edge u -> v: walk parents from u to v.
                let mut cyc = vec![u];
                let mut x = u;
                while x != v {
                    x = parent[x];
                    cyc.push(x);
                }
                return Some(cyc);
            }
        }
        if !advanced {
            state[u] = 2;
            stack.pop();
        }
    }
    None
}

fn find_fragments(
    n: usize,
    adj: &[Vec<usize>],
    in_h: &[bool],
    embedded: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let mut frags = Vec::new();
    // Single-edge fragments between embedded vertices.
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !embedded.contains(&key(u, v)) {
                frags.push(Fragment {
                    attach: vec![u, v],
                    inner: vec![],
                });
            }
        }
    }
    // Components of G minus the embedded subgraph.
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        let mut attach = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if in_h[v] {
                    attach.insert(v);
                } else if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        frags.push(Fragment {
            attach: attach.into_iter().collect(),
            inner: comp,
        });
    }
    frags
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Option<Vec<usize>> {
    if frag.inner.is_empty() {
        return Some(frag.attach.clone());
    }
    if frag.attach.len() < 2 {
        return None;
    }
    let a = frag.attach[0];
    let inner: HashSet<usize> = frag.inner.iter().copied().collect();
    // BFS from a through inner vertices until another attachment.
    let mut prev: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if inner.contains(&w) && !prev.contains_key(&w) {
            prev.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if in_h[v] && v != a {
                // Reached another attachment.
                let mut path = vec![v, u];
                let mut x = u;
                while x != a {
                    x = prev[&x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            if inner.contains(&v) && !prev.contains_key(&v) {
                prev.insert(v, u);
                queue.push_back(v);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_adj, cube_q3, k4, k5, prism};

    fn embed_input(g: &crate::graph::GraphInput) -> Option<Vec<Vec<usize>>> {
        let adj = build_adj(g.n, &g.edges).unwrap();
        planar_embedding(g.n, &adj)
    }

    #[test]
    fn k4_planar_with_euler_faces() {
        let faces = embed_input(&k4()).unwrap();
        // f = m - n + 2 = 6 - 4 + 2 = 4
        assert_eq!(faces.len(), 4);
        for f in &faces {
            assert_eq!(f.len(), 3);
        }
    }

    #[test]
    fn prism_faces() {
        let faces = embed_input(&prism()).unwrap();
        assert_eq!(faces.len(), 9 - 6 + 2);
    }

    #[test]
    fn cube_faces() {
        let faces = embed_input(&cube_q3()).unwrap();
        assert_eq!(faces.len(), 12 - 8 + 2);
        for f in &faces {
            assert_eq!(f.len(), 4);
        }
    }

    #[test]
    fn k5_rejected() {
        assert!(embed_input(&k5()).is_none());
    }

    #[test]
    fn k33_rejected() {
        // K3,3 passes the Euler bound but is not planar.
        let g = crate::graph::GraphInput {
            n: 6,
            edges: vec![
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        };
        assert!(embed_input(&g).is_none());
    }

    #[test]
    fn blocks_of_two_triangles_sharing_vertex() {
        // Bowtie: two triangles sharing vertex 2.
        let adj = build_adj(
            5,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
        )
        .unwrap();
        let blocks = biconnected_components(5, &adj);
        assert_eq!(blocks.len(), 2);
        assert!(is_planar(5, &adj));
    }
}

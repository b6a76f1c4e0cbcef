use super::GraphInput;

/// Complete graph on four vertices, the smallest 3-regular planar graph.
pub fn k4() -> GraphInput {
    GraphInput {
        n: 4,
        edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    }
}

/// Complete graph on five vertices (not planar).
pub fn k5() -> GraphInput {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            edges.push((u, v));
        }
    }
    GraphInput { n: 5, edges }
}

/// Path on three vertices (planar but not 3-regular).
pub fn path3() -> GraphInput {
    GraphInput {
        n: 3,
        edges: vec![(0, 1), (1, 2)],
    }
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> GraphInput {
    GraphInput {
        n: 6,
        edges: vec![
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    }
}

/// The cube graph Q3.
pub fn cube_q3() -> GraphInput {
    GraphInput {
        n: 8,
        edges: vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    }
}

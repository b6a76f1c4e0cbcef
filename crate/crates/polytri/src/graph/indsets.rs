use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeMap;

use super::{GraphError, PlanarGraph3};

fn adjacency_masks(g: &PlanarGraph3) -> Vec<u64> {
    let mut masks = vec![0u64; g.num_vertices()];
    for &(u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

fn check_cap(g: &PlanarGraph3, cap: usize) -> Result<(), GraphError> {
    let n = g.num_vertices();
    if n > cap || n >= 64 {
        return Err(GraphError::TooLarge(n, cap));
    }
    Ok(())
}

/// Exact number of independent sets (including the empty set), by subset
/// enumeration. The cap keeps the 2^n loop at desk scale.
pub fn count_independent_sets(g: &PlanarGraph3, cap: usize) -> Result<BigUint, GraphError> {
    check_cap(g, cap)?;
    let masks = adjacency_masks(g);
    let n = g.num_vertices();
    let mut count = 0u64;
    'subsets: for s in 0u64..(1 << n) {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if masks[v] & s != 0 {
                continue 'subsets;
            }
            rest &= rest - 1;
        }
        count += 1;
    }
    Ok(BigUint::from(count))
}

/// Exact counts of independent sets by size.
pub fn independent_set_histogram(
    g: &PlanarGraph3,
    cap: usize,
) -> Result<BTreeMap<usize, BigUint>, GraphError> {
    check_cap(g, cap)?;
    let masks = adjacency_masks(g);
    let n = g.num_vertices();
    let mut hist: BTreeMap<usize, BigUint> = BTreeMap::new();
    'subsets: for s in 0u64..(1 << n) {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if masks[v] & s != 0 {
                continue 'subsets;
            }
            rest &= rest - 1;
        }
        *hist.entry(s.count_ones() as usize).or_insert_with(BigUint::zero) += 1u32;
    }
    Ok(hist)
}

/// Exact number of vertex covers; equals the number of independent sets by
/// complementation, which the tests exercise as an independent route.
pub fn count_vertex_covers(g: &PlanarGraph3, cap: usize) -> Result<BigUint, GraphError> {
    check_cap(g, cap)?;
    let n = g.num_vertices();
    let edges = g.edges().to_vec();
    let mut count = 0u64;
    'subsets: for s in 0u64..(1 << n) {
        for &(u, v) in &edges {
            if s & (1 << u) == 0 && s & (1 << v) == 0 {
                continue 'subsets;
            }
        }
        count += 1;
    }
    Ok(BigUint::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cube_q3, k4, prism, validate_graph, DEFAULT_BRUTE_FORCE_CAP};

    #[test]
    fn k4_counts() {
        let g = validate_graph(&k4()).unwrap();
        let c = count_independent_sets(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(c, BigUint::from(5u32));
        let h = independent_set_histogram(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(h.get(&0), Some(&BigUint::from(1u32)));
        assert_eq!(h.get(&1), Some(&BigUint::from(4u32)));
        assert_eq!(h.get(&2), None);
    }

    #[test]
    fn histogram_sums_to_total() {
        for input in [prism(), cube_q3()] {
            let g = validate_graph(&input).unwrap();
            let c = count_independent_sets(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            let h = independent_set_histogram(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            let sum: BigUint = h.values().sum();
            assert_eq!(sum, c);
        }
    }

    #[test]
    fn covers_equal_independent_sets() {
        for input in [k4(), prism(), cube_q3()] {
            let g = validate_graph(&input).unwrap();
            let ind = count_independent_sets(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            let cov = count_vertex_covers(&g, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            assert_eq!(ind, cov);
        }
    }

    #[test]
    fn cap_enforced() {
        let g = validate_graph(&prism()).unwrap();
        assert!(count_independent_sets(&g, 4).is_err());
    }
}

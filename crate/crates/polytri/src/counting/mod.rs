//! Exact triangulation counting: the interval dynamic program for simple
//! polygons, a canonical backtracking enumerator used as an independent
//! oracle, the hole-aware counter built on combinations of left diagonals,
//! and the gadget counting constants with the master product formula.

mod constants;
mod dp;
mod enumerate;
mod holes;
mod shapes;

pub use constants::{binomial, catalan, CountingConstants};
pub use dp::{alpha_beta, count_simple, count_simple_poly, cycle_dp};
pub use enumerate::{enumerate_bruteforce, EnumerationResult, Triangulation};
pub use holes::count_with_holes;
pub use shapes::{count_lens, lens_polygon, two_lens_hull_count, two_lens_hull_polygon};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("polygon is not simple: {0}")]
    NotSimple(String),
    #[error("instance too large for this engine: {0}")]
    TooLarge(String),
    #[error("instance infeasible for exact counting: {0}")]
    InfeasibleSize(String),
    #[error("r = {r} invalid for n = {n}")]
    BadR { n: u64, r: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Geometry(#[from] crate::geometry::GeometryError),
}

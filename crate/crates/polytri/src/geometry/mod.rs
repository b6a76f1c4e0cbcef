//! Exact integer and rational geometric primitives and predicates.
//!
//! Coordinates are `i64` grid units, bounded by [`MAX_COORD`] so that every
//! predicate evaluates exactly in `i128` without overflow. Crossing points of
//! integer segments are exact rationals and never become polygon vertices.

mod chain;
pub mod point;
pub mod polygon;
pub mod segment;
mod visibility;

pub use chain::{convex_chain, convex_polygon, lens_chain_between, ConvexChain};
pub use point::{Point, RationalPoint, MAX_COORD};
pub use polygon::{dir_in_wedge, signed_area2, PolygonWithHoles, VertexId};
pub use segment::{
    crossing_parameter, crossing_point, on_segment, orient, properly_cross, segments_touch,
    strictly_on_open_segment, Segment,
};
pub use visibility::CleanMatrix;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("coordinate magnitude {0} exceeds the exact-arithmetic bound")]
    CoordinateTooLarge(i64),
    #[error("segment endpoints coincide at ({0}, {1})")]
    DegenerateSegment(i64, i64),
    #[error("segments do not properly cross")]
    NoCrossing,
    #[error("polygon is not simple: {0}")]
    NotSimple(String),
    #[error("polygon structure invalid: {0}")]
    BadPolygon(String),
}

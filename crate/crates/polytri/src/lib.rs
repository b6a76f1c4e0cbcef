//! Exact computational geometry for counting triangulations of polygons with
//! holes, together with the machinery that turns planar cubic graphs into
//! red-blue segment arrangements and those arrangements into telescope-gadget
//! polygons whose triangulation counts encode independent-set counts.
//!
//! All geometric predicates are exact integer (or exact rational) arithmetic;
//! there are no epsilon tolerances anywhere in this crate. Counts are
//! arbitrary-precision integers.

// pub mod arrangement;
pub mod counting;
// pub mod gadget;
pub mod geometry;
pub mod graph;
// pub mod pipeline;
// pub mod render;

pub use geometry::{Point, PolygonWithHoles, RationalPoint, Segment};

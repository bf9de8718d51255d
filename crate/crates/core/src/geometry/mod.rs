//! Planar polygon primitives, least-perimeter circumscribed polygons, and
//! the canonical Cairo and Prismatic prototiles.

mod circumscribed;
mod isometry;
mod point;
mod polygon;
mod prototile;

use thiserror::Error;

pub use circumscribed::{
    circumscribed_polygon, closed_form_perimeter, polygon_from_support, scale_to_unit_area,
    AngleSpec, ANGLE_SUM_TOLERANCE,
};
pub use isometry::Isometry;
pub use point::Point;
pub use polygon::{
    convex_intersection_area, polygon_metrics, signed_area, ConvexPolygon, PolygonMetrics,
};
pub use prototile::{
    long_edge_length, make_prototile, optimal_pentagon_perimeter, prismatic_base_length,
    short_edge_length, Prototile, PrototileKind,
};

/// Absolute tolerance for geometric predicates on unit-area shapes.
pub const GEOMETRIC_TOLERANCE: f64 = 1e-9;

/// Lengths and areas at or below this are treated as zero.
pub const DEGENERACY_CUTOFF: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("need at least 3 angles, got {0}")]
    TooFewAngles(usize),
    #[error("angle {index} = {value} rad is outside (0, π)")]
    AngleOutOfRange { index: usize, value: f64 },
    #[error("angles sum to {actual}, expected {expected}")]
    AngleSumMismatch { expected: f64, actual: f64 },
    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),
    #[error("polygon is not convex at vertex {vertex}")]
    NotConvex { vertex: usize },
    #[error("polygon boundary winds more than once")]
    NotSimple,
}

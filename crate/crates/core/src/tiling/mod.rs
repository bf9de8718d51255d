//! Cairo, Prismatic and row-mixed pentagonal tilings as explicit patches:
//! generation, validation, the merged vertex/edge/face graph, Euler and
//! vertex-degree audits, and perimeter-ratio estimates.

mod audit;
mod generate;
mod graph;
mod index;
mod patch;
mod pattern;
mod ratio;
mod validate;

use thiserror::Error;

use crate::geometry::Point;

pub use audit::{euler_audit, EulerAudit, BOUNDARY_CONSTANT};
pub use generate::{generate, generate_unchecked, INCLUSION_SLACK, MIN_RADIUS};
pub use graph::{build_graph, Corner, InteriorStats, PatchGraph, ANGLE_TOLERANCE, MERGE_TOLERANCE};
pub use patch::{fit_isometry, PlacedTile, TileKind, TilingPatch};
pub use pattern::{Pattern, RowKind, RowSequence};
pub use ratio::{
    per_tile_perimeter, perimeter_ratio, ratio_convergence, BoundaryEdges, ConvergenceReport,
    ConvergenceRow, RatioSample, RATIO_WINDOW, RATIO_WINDOW_STEP,
};
pub use validate::{
    validate, ValidationFailure, GAP_PROBE_PITCH, OVERLAP_TOLERANCE, TILE_TOLERANCE,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TilingError {
    #[error("validation failed: {0}")]
    Validation(#[from] ValidationFailure),
    #[error("outside the domain: {0}")]
    DomainViolation(String),
    #[error("radius {radius} exceeds the patch window {window}")]
    RadiusExceedsWindow { radius: f64, window: f64 },
    #[error("patch has no interior tiles")]
    InsufficientInterior,
    #[error("vertex ({}, {}) is within merge tolerance of {candidates} distinct vertices", point.x, point.y)]
    MergeAmbiguity { point: Point, candidates: usize },
    #[error("{0}")]
    Parse(String),
}

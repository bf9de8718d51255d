//! Numerical certification of the inequalities behind the optimality of the
//! Cairo and Prismatic tilings: the perimeter surfaces `Pₙ(k, q)` and their
//! derivatives, the convexity discriminants, midpoint-convexity scans, the
//! angle/edge constraint identity, and the two linear lower-bound chains.

mod bounds;
mod constraints;
mod convexity;
pub mod finite_diff;
mod discriminants;
mod surface;

use thiserror::Error;

pub use bounds::{
    q_bound_check, BoundComparison, QBoundReport, QChain, RoundingCheck, CONSTANT_TOLERANCE,
};
pub use constraints::{
    constraint_identity_check, constraint_identity_scan, sample_constraint_tuple, ConstraintScan,
    ConstraintTuple,
};
pub use convexity::{
    convexity_scan_f_n, f_n, ConvexityScanReport, ConvexitySurface, LineClass, LineClassStats,
};
pub use discriminants::{
    vertical_derivative_check, vertical_discriminant, vertical_scan, sloped_derivative_check,
    sloped_discriminant, sloped_scan, DInterpretation, DerivativeCheck, DiscriminantScan,
    VerticalLineProbe, SlopedLineProbe,
};
pub use surface::{
    angle_budget, eval_p, grad_p, grad_p_numeric, gradient_check, hess_p, hess_p_numeric,
    linearisation_points, perimeter_at, round_to, surface_derivative_check, DerivativeEntry,
    DerivativeTable, PerimeterSurfacePoint, PUBLISHED_DERIVATIVES,
};

/// Half-angles in scans are clipped to `[SCAN_CLIP_MARGIN, π/2 − SCAN_CLIP_MARGIN]`.
pub const SCAN_CLIP_MARGIN: f64 = 0.05;

/// Half-angles for finite-difference spot checks are drawn from
/// `[FD_INTERIOR_MARGIN, π/2 − FD_INTERIOR_MARGIN]`, well away from the
/// singularities of `cot` and `csc`.
pub const FD_INTERIOR_MARGIN: f64 = 0.2;

/// Number of independent RNG substreams a parallel scan is split into.
/// Fixed so results do not depend on the thread count.
pub(crate) const SCAN_CHUNKS: u64 = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AnalysisError {
    #[error("outside the domain: {0}")]
    DomainViolation(String),
    #[error("radicand {0} is not positive")]
    NegativeRadicand(f64),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}

/// Splits `total` into [`SCAN_CHUNKS`] near-equal parts.
pub(crate) fn chunk_sizes(total: usize) -> Vec<usize> {
    let chunks = SCAN_CHUNKS as usize;
    (0..chunks)
        .map(|i| total / chunks + usize::from(i < total % chunks))
        .collect()
}

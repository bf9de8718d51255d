use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::index::GridIndex;
use super::patch::{fit_isometry, TilingPatch};
use super::TilingError;
use crate::geometry::{convex_intersection_area, make_prototile, Point, PrototileKind};

/// Largest intersection area tolerated between two tiles.
pub const OVERLAP_TOLERANCE: f64 = 1e-7;
/// Spacing of the probe grid used to detect gaps.
pub const GAP_PROBE_PITCH: f64 = 0.05;
/// Tolerance on tile area and on congruence with the prototile.
pub const TILE_TOLERANCE: f64 = 1e-7;

/// First problem found in a patch.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "failure", rename_all = "snake_case")]
pub enum ValidationFailure {
    Overlap { first: usize, second: usize, area: f64 },
    Gap { point: Point },
    Area { tile: usize, area: f64 },
    NotCongruent { tile: usize, residual: f64 },
    Degenerate { tile: usize, reason: String },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::Overlap {
                first,
                second,
                area,
            } => write!(f, "tiles {first} and {second} overlap in area {area:e}"),
            ValidationFailure::Gap { point } => {
                write!(f, "probe point ({}, {}) lies in no tile", point.x, point.y)
            }
            ValidationFailure::Area { tile, area } => {
                write!(f, "tile {tile} has area {area}, expected 1")
            }
            ValidationFailure::NotCongruent { tile, residual } => write!(
                f,
                "tile {tile} is off its prototile by {residual:e}"
            ),
            ValidationFailure::Degenerate { tile, reason } => {
                write!(f, "tile {tile} is degenerate: {reason}")
            }
        }
    }
}

impl std::error::Error for ValidationFailure {}

/// Spatial index of tile bounding boxes with unit cells.
pub(crate) fn tile_index(patch: &TilingPatch) -> GridIndex {
    let mut index = GridIndex::new(1.0);
    for (i, t) in patch.tiles.iter().enumerate() {
        let (lo, hi) = t.bounding_box();
        index.insert_box(i, lo, hi);
    }
    index
}

fn check_tiles(patch: &TilingPatch) -> Result<(), ValidationFailure> {
    let cairo = make_prototile(PrototileKind::Cairo);
    let prismatic = make_prototile(PrototileKind::Prismatic);
    for (i, t) in patch.tiles.iter().enumerate() {
        if t.vertices.len() < 3 || t.vertices.iter().any(|p| !p.is_finite()) {
            return Err(ValidationFailure::Degenerate {
                tile: i,
                reason: "fewer than 3 finite vertices".into(),
            });
        }
        if t.polygon().is_none() {
            return Err(ValidationFailure::Degenerate {
                tile: i,
                reason: "not a convex counterclockwise loop".into(),
            });
        }
        let area = t.area();
        if (area - 1.0).abs() > TILE_TOLERANCE {
            return Err(ValidationFailure::Area { tile: i, area });
        }
        let proto = match t.kind.prototile() {
            Some(PrototileKind::Cairo) => &cairo,
            Some(PrototileKind::Prismatic) => &prismatic,
            None => continue,
        };
        let model = proto.shape.vertices();
        let fitted = fit_isometry(model, &t.vertices).map_or(f64::INFINITY, |f| f.1);
        // the recorded placement must also reproduce the loop
        let recorded = model
            .iter()
            .map(|&p| {
                let q = t.isometry.apply(p);
                t.vertices
                    .iter()
                    .map(|v| v.distance(q))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        let residual = fitted.max(recorded);
        if !(residual <= TILE_TOLERANCE) {
            return Err(ValidationFailure::NotCongruent { tile: i, residual });
        }
    }
    Ok(())
}

fn boxes_overlap(a: (Point, Point), b: (Point, Point)) -> bool {
    a.0.x < b.1.x && b.0.x < a.1.x && a.0.y < b.1.y && b.0.y < a.1.y
}

fn check_overlaps(patch: &TilingPatch, index: &GridIndex) -> Result<(), ValidationFailure> {
    let found = (0..patch.tiles.len())
        .into_par_iter()
        .filter_map(|i| {
            let a = &patch.tiles[i];
            let ba = a.bounding_box();
            index
                .in_box(ba.0, ba.1)
                .into_iter()
                .filter(|&j| j > i)
                .find_map(|j| {
                    let b = &patch.tiles[j];
                    if !boxes_overlap(ba, b.bounding_box()) {
                        return None;
                    }
                    let area = convex_intersection_area(&a.vertices, &b.vertices);
                    (area > OVERLAP_TOLERANCE).then_some(ValidationFailure::Overlap {
                        first: i,
                        second: j,
                        area,
                    })
                })
        })
        .find_first(|_| true);
    found.map_or(Ok(()), Err)
}

fn check_gaps(patch: &TilingPatch, index: &GridIndex) -> Result<(), ValidationFailure> {
    let r = patch.window_radius;
    let steps = (r / GAP_PROBE_PITCH).floor() as i64;
    let found = (-steps..=steps)
        .into_par_iter()
        .filter_map(|iy| {
            let y = iy as f64 * GAP_PROBE_PITCH;
            (-steps..=steps).find_map(|ix| {
                let p = Point::new(ix as f64 * GAP_PROBE_PITCH, y);
                if p.norm() > r {
                    return None;
                }
                let covered = index
                    .at(p)
                    .iter()
                    .any(|&t| patch.tiles[t].contains(p, 1e-9));
                (!covered).then_some(ValidationFailure::Gap { point: p })
            })
        })
        .find_first(|_| true);
    found.map_or(Ok(()), Err)
}

/// Checks every tile (area 1, convex, congruent to its prototile), pairwise
/// interior-disjointness, and coverage of the window disc on a probe grid.
pub fn validate(patch: &TilingPatch) -> Result<(), TilingError> {
    check_tiles(patch)?;
    let index = tile_index(patch);
    check_overlaps(patch, &index)?;
    check_gaps(patch, &index)?;
    Ok(())
}

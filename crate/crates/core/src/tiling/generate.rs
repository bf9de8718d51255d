//! Strip construction of Cairo, Prismatic and row-mixed tilings.
//!
//! Work in the incircle-radius-1 scale (tiles of area `2 + √3`) and shrink
//! by `1/√(2 + √3)` at the end. Both tilings are unions of congruent strips
//! with the same period `τ = (1, 2 + √3)` and bounded by the same zigzag
//! polyline: a vertical segment of length `2b₀` through a degree-4 vertex,
//! then a short edge rising at 30°, repeated.
//!
//! * A Cairo strip is four pentagons rotated by quarter turns about a
//!   common degree-4 vertex `Z`; the next strip is offset by `(2 + √3, −1)`.
//! * A Prismatic strip is an upright house and its mirror image sharing the
//!   base; the next strip is offset by the base vector `(2, 0)`.
//!
//! Since both strip types share their boundary, strips of either type can be
//! stacked in any order. Strip `j` uses row kind `word[j mod len]` and strip
//! `j + 1` sits at the offset of strip `j` plus that row's step.

use super::patch::{fit_isometry, PlacedTile, TileKind, TilingPatch};
use super::pattern::{Pattern, RowKind, RowSequence};
use super::validate::validate;
use super::TilingError;
use crate::geometry::{make_prototile, Isometry, Point};

/// Generated tiles are kept iff their centroid lies within `R + INCLUSION_SLACK`.
pub const INCLUSION_SLACK: f64 = 2.0;

/// Smallest window radius accepted by [`generate`].
pub const MIN_RADIUS: f64 = 3.0;

struct Lattice {
    scale: f64,
    tau: Point,
    cairo_step: Point,
    prismatic_step: Point,
    cairo: Vec<Vec<Point>>,
    prismatic: Vec<Vec<Point>>,
}

impl Lattice {
    fn new() -> Self {
        let s3 = 3f64.sqrt();
        let b0 = 1.0 + 1.0 / s3;
        let h = 1.0 + 2.0 / s3;
        let t = 2.0 + s3;
        let z = Point::new((3.0 + s3) / 2.0, (1.0 + s3) / 2.0);
        let p0 = [
            Point::new(1.0, h),
            Point::new(0.0, b0),
            Point::ORIGIN,
            Point::new(b0, 0.0),
            z,
        ];
        let cairo = (0..4)
            .map(|k| {
                let r = Isometry::rotation_about(z, k as f64 * std::f64::consts::FRAC_PI_2);
                p0.iter().map(|&p| r.apply(p)).collect()
            })
            .collect();
        let up = vec![
            Point::ORIGIN,
            Point::new(2.0, 0.0),
            Point::new(2.0, b0),
            Point::new(1.0, h),
            Point::new(0.0, b0),
        ];
        let down = up.iter().rev().map(|p| Point::new(p.x, -p.y)).collect();
        Lattice {
            scale: 1.0 / t.sqrt(),
            tau: Point::new(1.0, t),
            cairo_step: Point::new(t, -1.0),
            prismatic_step: Point::new(2.0, 0.0),
            cairo,
            prismatic: vec![up, down],
        }
    }

    fn step(&self, row: RowKind) -> Point {
        match row {
            RowKind::C => self.cairo_step,
            RowKind::P => self.prismatic_step,
        }
    }

    fn motif(&self, row: RowKind) -> &[Vec<Point>] {
        match row {
            RowKind::C => &self.cairo,
            RowKind::P => &self.prismatic,
        }
    }
}

/// A motif tile in unit scale together with the motion placing the
/// canonical prototile onto it.
struct MotifTile {
    kind: TileKind,
    isometry: Isometry,
    vertices: Vec<Point>,
}

fn scaled_motif(lattice: &Lattice, row: RowKind) -> Vec<MotifTile> {
    let proto = make_prototile(row.prototile());
    lattice
        .motif(row)
        .iter()
        .map(|tile| {
            let vertices: Vec<Point> = tile.iter().map(|&p| p * lattice.scale).collect();
            let (isometry, residual) =
                fit_isometry(proto.shape.vertices(), &vertices).expect("pentagons");
            debug_assert!(residual < 1e-12, "motif tile off prototile by {residual}");
            MotifTile {
                kind: row.prototile().into(),
                isometry,
                vertices,
            }
        })
        .collect()
}

/// Strip offsets `o_j` for `j` in `[j_min, j_max]`, in unit scale, covering
/// every strip whose normal coordinate lies within `reach`.
fn strip_offsets(lattice: &Lattice, rows: &RowSequence, reach: f64) -> Vec<(i64, Point)> {
    let normal = {
        let n = Point::new(lattice.tau.y, -lattice.tau.x);
        n * (1.0 / n.norm())
    };
    let mut forward = vec![(0i64, Point::ORIGIN)];
    loop {
        let &(j, o) = forward.last().expect("nonempty");
        if o.dot(normal) > reach {
            break;
        }
        forward.push((j + 1, o + lattice.step(rows.at(j))));
    }
    let mut backward = Vec::new();
    let (mut j, mut o) = (0i64, Point::ORIGIN);
    while o.dot(normal) >= -reach {
        j -= 1;
        o = o - lattice.step(rows.at(j));
        backward.push((j, o));
    }
    backward.reverse();
    backward.extend(forward);
    backward
}

/// Tiles of `pattern` with centroid within `R + 2`, without validation.
/// Order is deterministic: strip, then period, then motif position.
pub fn generate_unchecked(pattern: &Pattern, radius: f64) -> TilingPatch {
    let lattice = Lattice::new();
    let rows = pattern.rows();
    let cairo = scaled_motif(&lattice, RowKind::C);
    let prismatic = scaled_motif(&lattice, RowKind::P);
    let limit = radius + INCLUSION_SLACK;
    let extent = cairo
        .iter()
        .chain(&prismatic)
        .flat_map(|t| t.vertices.iter())
        .map(|p| p.norm())
        .fold(0.0, f64::max);
    let reach = limit + extent;
    let tau = lattice.tau * lattice.scale;
    let tau_len = tau.norm();
    let tau_hat = tau * (1.0 / tau_len);

    let mut tiles = Vec::new();
    for (j, offset) in strip_offsets(&lattice, &rows, reach / lattice.scale) {
        let origin = offset * lattice.scale;
        let along = origin.dot(tau_hat);
        let m_lo = ((-reach - along) / tau_len).floor() as i64;
        let m_hi = ((reach - along) / tau_len).ceil() as i64;
        let motif = match rows.at(j) {
            RowKind::C => &cairo,
            RowKind::P => &prismatic,
        };
        for m in m_lo..=m_hi {
            let shift = origin + tau * m as f64;
            for t in motif {
                let tile = PlacedTile {
                    kind: t.kind,
                    isometry: Isometry {
                        translation: t.isometry.translation + shift,
                        ..t.isometry
                    },
                    vertices: t.vertices.iter().map(|&p| p + shift).collect(),
                };
                if tile.centroid().norm() <= limit {
                    tiles.push(tile);
                }
            }
        }
    }
    TilingPatch {
        window_radius: radius,
        tiles,
    }
}

/// Generates and validates a patch of `pattern` covering the disc of radius
/// `radius`.
pub fn generate(pattern: &Pattern, radius: f64) -> Result<TilingPatch, TilingError> {
    if !(radius >= MIN_RADIUS) || !radius.is_finite() {
        return Err(TilingError::DomainViolation(format!(
            "radius {radius} must be a finite number ≥ {MIN_RADIUS}"
        )));
    }
    let patch = generate_unchecked(pattern, radius);
    validate(&patch)?;
    Ok(patch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn motif_tiles_are_prototile_copies() {
        let lattice = Lattice::new();
        for row in [RowKind::C, RowKind::P] {
            let motif = scaled_motif(&lattice, row);
            for t in &motif {
                let proto = make_prototile(row.prototile());
                let (_, residual) = fit_isometry(proto.shape.vertices(), &t.vertices).unwrap();
                assert!(residual < 1e-12);
            }
        }
    }

    #[test]
    fn both_strips_advance_the_same_period() {
        // Z + R₉₀Z is the Cairo period; the Prismatic period is the house height.
        let lattice = Lattice::new();
        let s3 = 3f64.sqrt();
        let z = Point::new((3.0 + s3) / 2.0, (1.0 + s3) / 2.0);
        let tau = z + z.perp();
        assert!((tau - lattice.tau).norm() < 1e-12);
    }

    #[test]
    fn tile_count_tracks_disc_area() {
        let patch = generate_unchecked(&Pattern::Cairo, 10.0);
        let expected = PI * 12.0 * 12.0;
        let ratio = patch.len() as f64 / expected;
        assert!((ratio - 1.0).abs() < 0.1, "{} tiles", patch.len());
    }

    #[test]
    fn radius_below_minimum_is_rejected() {
        assert!(matches!(
            generate(&Pattern::Cairo, 2.5),
            Err(TilingError::DomainViolation(_))
        ));
        assert!(generate(&Pattern::Cairo, f64::NAN).is_err());
    }

    #[test]
    fn output_is_deterministic() {
        let p: Pattern = "rows:CPP".parse().unwrap();
        assert_eq!(generate_unchecked(&p, 6.0), generate_unchecked(&p, 6.0));
    }
}

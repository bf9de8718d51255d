//! Finite-window estimates of the perimeter ratio: boundary length inside
//! the disc `D_R`, counting shared edges once, over `πR²`.

use serde::Serialize;

use super::graph::{build_graph, PatchGraph};
use super::patch::TilingPatch;
use super::TilingError;
use crate::geometry::Point;

/// Width of the trailing window of radii averaged by [`ratio_convergence`].
pub const RATIO_WINDOW: f64 = 5.0;
/// Spacing of radii inside that window.
pub const RATIO_WINDOW_STEP: f64 = 0.25;

/// The distinct edges of a patch, each once.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryEdges {
    window_radius: f64,
    segments: Vec<(Point, Point)>,
}

/// Length of the part of segment `pq` inside the disc of radius `r`.
fn clipped_length(p: Point, q: Point, r: f64) -> f64 {
    let d = q - p;
    let a = d.norm_squared();
    let b = 2.0 * p.dot(d);
    let c = p.norm_squared() - r * r;
    let disc = b * b - 4.0 * a * c;
    if a == 0.0 || disc <= 0.0 {
        return 0.0;
    }
    let s = disc.sqrt();
    let t0 = ((-b - s) / (2.0 * a)).max(0.0);
    let t1 = ((-b + s) / (2.0 * a)).min(1.0);
    (t1 - t0).max(0.0) * a.sqrt()
}

impl BoundaryEdges {
    pub fn from_graph(graph: &PatchGraph, window_radius: f64) -> Self {
        BoundaryEdges {
            window_radius,
            segments: graph
                .edges
                .iter()
                .map(|&(a, b)| (graph.vertices[a], graph.vertices[b]))
                .collect(),
        }
    }

    pub fn from_patch(patch: &TilingPatch) -> Result<Self, TilingError> {
        Ok(Self::from_graph(&build_graph(patch)?, patch.window_radius))
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Total edge length inside `D_r`, with edges crossing the circle clipped
    /// exactly.
    pub fn length_inside(&self, r: f64) -> f64 {
        self.segments
            .iter()
            .map(|&(p, q)| clipped_length(p, q, r))
            .sum()
    }

    /// `ρ_r`; `r` must lie in `(0, window_radius]`.
    pub fn ratio(&self, r: f64) -> Result<f64, TilingError> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(TilingError::DomainViolation(format!(
                "radius {r} must be positive and finite"
            )));
        }
        if r > self.window_radius {
            return Err(TilingError::RadiusExceedsWindow {
                radius: r,
                window: self.window_radius,
            });
        }
        Ok(self.length_inside(r) / (std::f64::consts::PI * r * r))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioSample {
    pub radius: f64,
    pub rho: f64,
}

/// `ρ_R` for each requested radius.
pub fn perimeter_ratio(patch: &TilingPatch, radii: &[f64]) -> Result<Vec<RatioSample>, TilingError> {
    let edges = BoundaryEdges::from_patch(patch)?;
    radii
        .iter()
        .map(|&radius| Ok(RatioSample { radius, rho: edges.ratio(radius)? }))
        .collect()
}

/// Mean perimeter of the interior tiles.
pub fn per_tile_perimeter(patch: &TilingPatch) -> Result<f64, TilingError> {
    let graph = build_graph(patch)?;
    if graph.interior_tiles.is_empty() {
        return Err(TilingError::InsufficientInterior);
    }
    let total: f64 = graph
        .interior_tiles
        .iter()
        .map(|&t| patch.tiles[t].perimeter())
        .sum();
    Ok(total / graph.interior_tiles.len() as f64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub radius: f64,
    pub rho: f64,
    /// `|ρ_R − target|`
    pub deviation: f64,
    /// Root mean square of `ρ_r − target` over `r ∈ [R − RATIO_WINDOW, R]`.
    pub windowed_rms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub target: f64,
    pub rows: Vec<ConvergenceRow>,
    /// Least-squares slope of `log windowed_rms` against `log R`.
    pub decay_exponent: f64,
}

fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Tracks how fast `ρ_R` approaches `target`.
///
/// A single `ρ_R` oscillates as the circle sweeps across rows of edges, so
/// the trend is fitted to the RMS deviation over a trailing window of radii
/// rather than to isolated samples. Needs at least two radii, each at least
/// `RATIO_WINDOW` and at most the window radius.
pub fn ratio_convergence(
    patch: &TilingPatch,
    radii: &[f64],
    target: f64,
) -> Result<ConvergenceReport, TilingError> {
    if radii.len() < 2 {
        return Err(TilingError::DomainViolation(
            "need at least two radii to fit a trend".into(),
        ));
    }
    if let Some(&r) = radii.iter().find(|&&r| !(r > RATIO_WINDOW)) {
        return Err(TilingError::DomainViolation(format!(
            "radius {r} must exceed the averaging window {RATIO_WINDOW}"
        )));
    }
    let edges = BoundaryEdges::from_patch(patch)?;
    let steps = (RATIO_WINDOW / RATIO_WINDOW_STEP).round() as usize;
    let rows = radii
        .iter()
        .map(|&radius| {
            let rho = edges.ratio(radius)?;
            let mut sq = 0.0;
            for i in 0..=steps {
                let r = radius - RATIO_WINDOW + i as f64 * RATIO_WINDOW_STEP;
                sq += (edges.ratio(r)? - target).powi(2);
            }
            Ok(ConvergenceRow {
                radius,
                rho,
                deviation: (rho - target).abs(),
                windowed_rms: (sq / (steps + 1) as f64).sqrt(),
            })
        })
        .collect::<Result<Vec<_>, TilingError>>()?;
    let xs: Vec<f64> = rows.iter().map(|r| r.radius).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.windowed_rms).collect();
    Ok(ConvergenceReport {
        target,
        decay_exponent: log_log_slope(&xs, &ys),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{generate_unchecked, Pattern};
    use std::f64::consts::PI;

    #[test]
    fn clipping_matches_chord_geometry() {
        // horizontal chord at height h has half-length √(r² − h²)
        let len = clipped_length(Point::new(-10.0, 0.6), Point::new(10.0, 0.6), 1.0);
        assert!((len - 2.0 * 0.64f64.sqrt()).abs() < 1e-12);
        assert_eq!(clipped_length(Point::new(0.1, 0.0), Point::new(0.2, 0.0), 1.0), 0.1);
        assert_eq!(clipped_length(Point::new(2.0, 0.0), Point::new(3.0, 0.0), 1.0), 0.0);
        let half = clipped_length(Point::new(0.0, 0.0), Point::new(2.0, 0.0), 1.0);
        assert!((half - 1.0).abs() < 1e-12);
    }

    #[test]
    fn unit_square_grid_ratio() {
        // the grid lines x = i and y = j cut chords of length 2√(r² − i²)
        let mut loops = Vec::new();
        for i in -6..6 {
            for j in -6..6 {
                let (x, y) = (i as f64, j as f64);
                loops.push(vec![
                    Point::new(x, y),
                    Point::new(x + 1.0, y),
                    Point::new(x + 1.0, y + 1.0),
                    Point::new(x, y + 1.0),
                ]);
            }
        }
        let patch = TilingPatch::from_polygons(5.0, loops);
        let r = 4.5;
        let chord = |c: f64| 2.0 * (r * r - c * c).max(0.0).sqrt();
        let brute: f64 = 2.0 * (-6..=6).map(|i| chord(i as f64)).sum::<f64>();
        let rho = perimeter_ratio(&patch, &[r]).unwrap()[0].rho;
        assert!((rho - brute / (PI * r * r)).abs() < 1e-12);
        assert_eq!(per_tile_perimeter(&patch).unwrap(), 4.0);
    }

    #[test]
    fn radius_beyond_window_is_rejected() {
        let patch = generate_unchecked(&Pattern::Cairo, 5.0);
        assert!(matches!(
            perimeter_ratio(&patch, &[6.0]),
            Err(TilingError::RadiusExceedsWindow { .. })
        ));
    }

    #[test]
    fn cairo_per_tile_perimeter() {
        let patch = generate_unchecked(&Pattern::Cairo, 6.0);
        let p = per_tile_perimeter(&patch).unwrap();
        assert!((p - 2.0 * (2.0 + 3f64.sqrt()).sqrt()).abs() < 1e-7);
    }
}

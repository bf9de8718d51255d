//! Midpoint-convexity scan of `fₙ(k, q) = √(k cot θ + k′ cot θ′)` with
//! `θ = q/k`, `θ′ = (S − q)/k′` on the constraint surface `kθ + k′θ′ = S`.
//!
//! Every straight segment in the `(k, q)` plane is either vertical
//! (`k` constant) or lies on a line `q = αk + β`. On the latter,
//! `θ = d − c/k` and `θ′ = d′ − c′/k′` with `d = d′ = α`, `c = −β` and
//! `c′ = αn + β − S`, so each segment is classified by whether it satisfies
//! the hypotheses `c, c′ > 0`, `d ≥ 0` under which the nonvertical family is convex.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::surface::{angle_budget, hess_p, PerimeterSurfacePoint};
use super::{chunk_sizes, SCAN_CLIP_MARGIN};
use crate::sampling::substream;

/// Which angle-sum surface a scan runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexitySurface {
    /// `kθ + k′θ′ = (n − 2)π/2`, the angle sum of an n-gon.
    PerN,
    /// `kθ + k′θ′ = 3π/2` for every `n`, as printed.
    Printed,
}

impl ConvexitySurface {
    pub fn angle_sum(self, n: u32) -> f64 {
        match self {
            ConvexitySurface::PerN => angle_budget(n),
            ConvexitySurface::Printed => 1.5 * PI,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineClass {
    Vertical,
    /// Nonvertical with `c > 0`, `c′ > 0`, `d ≥ 0`.
    WithinHypotheses,
    /// Nonvertical with `c ≤ 0`, `c′ ≤ 0` or `d < 0`.
    OutsideHypotheses,
}

impl LineClass {
    pub const ALL: [LineClass; 3] = [
        LineClass::Vertical,
        LineClass::WithinHypotheses,
        LineClass::OutsideHypotheses,
    ];

    fn index(self) -> usize {
        match self {
            LineClass::Vertical => 0,
            LineClass::WithinHypotheses => 1,
            LineClass::OutsideHypotheses => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LineClassStats {
    pub class: LineClass,
    pub segments: usize,
    pub failures: usize,
    /// Smallest `((fₙ(a) + fₙ(b))/2 − fₙ(mid)) / |fₙ(mid)|` in this class.
    pub worst_relative_margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvexityScanReport {
    pub n: u32,
    pub surface: ConvexitySurface,
    pub angle_sum: f64,
    pub seed: u64,
    pub clip_margin: f64,
    pub requested: usize,
    pub segments: usize,
    pub attempts: u64,
    /// True when the clipped domain has no points at all.
    pub empty_domain: bool,
    pub passes: usize,
    pub failures: usize,
    pub worst_relative_margin: f64,
    /// `(k_a, q_a, k_b, q_b)` of the worst segment.
    pub worst_segment: Option<[f64; 4]>,
    /// Determinant of the Hessian of `Pₙ` at the midpoint of the worst
    /// segment (per-n surface only). Negative means the surface is
    /// genuinely saddle-shaped there.
    pub worst_hessian_det: Option<f64>,
    pub by_class: Vec<LineClassStats>,
}

impl ConvexityScanReport {
    pub fn passed(&self) -> bool {
        !self.empty_domain && self.segments == self.requested && self.failures == 0
    }

    pub fn class(&self, class: LineClass) -> &LineClassStats {
        &self.by_class[class.index()]
    }
}

/// `fₙ` on the surface with angle sum `s`, or `None` outside the clipped
/// domain `0 < k < n`, `θ, θ′ ∈ [m, π/2 − m]`, `min(θ, θ′) ≤ π/3`.
pub fn f_n(n: u32, s: f64, k: f64, q: f64) -> Option<f64> {
    let nf = n as f64;
    if !(k > 0.0 && k < nf) {
        return None;
    }
    let kp = nf - k;
    let (th, thp) = (q / k, (s - q) / kp);
    let lo = SCAN_CLIP_MARGIN;
    let hi = FRAC_PI_2 - SCAN_CLIP_MARGIN;
    if !(th >= lo && th <= hi && thp >= lo && thp <= hi) || th.min(thp) > FRAC_PI_3 {
        return None;
    }
    let g = k / th.tan() + kp / thp.tan();
    (g > 0.0).then(|| g.sqrt())
}

const SEGMENT_STEPS: usize = 16;
const VERTICAL_SHARE: f64 = 0.3;
const MAX_ATTEMPTS_PER_SEGMENT: u64 = 2_000;

struct Partial {
    segments: usize,
    attempts: u64,
    failures: usize,
    worst: f64,
    worst_segment: Option<[f64; 4]>,
    classes: [(usize, usize, f64); 3],
}

impl Partial {
    fn new() -> Self {
        Partial {
            segments: 0,
            attempts: 0,
            failures: 0,
            worst: f64::INFINITY,
            worst_segment: None,
            classes: [(0, 0, f64::INFINITY); 3],
        }
    }

    fn merge(&mut self, o: Partial) {
        self.segments += o.segments;
        self.attempts += o.attempts;
        self.failures += o.failures;
        if o.worst < self.worst {
            self.worst = o.worst;
            self.worst_segment = o.worst_segment;
        }
        for (a, b) in self.classes.iter_mut().zip(o.classes) {
            a.0 += b.0;
            a.1 += b.1;
            a.2 = a.2.min(b.2);
        }
    }
}

fn classify(n: u32, s: f64, dk: f64, dq: f64, k: f64, q: f64) -> LineClass {
    if dk == 0.0 {
        return LineClass::Vertical;
    }
    let alpha = dq / dk;
    let beta = q - alpha * k;
    let (c, c_prime, d) = (-beta, alpha * n as f64 + beta - s, alpha);
    if c > 0.0 && c_prime > 0.0 && d >= 0.0 {
        LineClass::WithinHypotheses
    } else {
        LineClass::OutsideHypotheses
    }
}

fn scan_chunk(n: u32, s: f64, count: usize, seed: u64, chunk: u64) -> Partial {
    let mut rng = substream(seed, chunk);
    let mut out = Partial::new();
    let nf = n as f64;
    let cap = MAX_ATTEMPTS_PER_SEGMENT * count as u64;
    while out.segments < count && out.attempts < cap {
        out.attempts += 1;
        let k = rng.random_range(0.0..nf);
        let q = rng.random_range(0.0..s);
        let (dk, dq) = if rng.random::<f64>() < VERTICAL_SHARE {
            (0.0, 1.0)
        } else {
            let a = rng.random_range(0.0..TAU);
            (a.cos(), a.sin())
        };
        let half = rng.random_range(0.01..0.5);
        let at = |t: f64| (k + t * dk * half, q + t * dq * half);
        // the clipped domain is not convex, so the whole segment is checked
        let inside = (0..=SEGMENT_STEPS).all(|i| {
            let (x, y) = at(-1.0 + 2.0 * i as f64 / SEGMENT_STEPS as f64);
            f_n(n, s, x, y).is_some()
        });
        if !inside {
            continue;
        }
        let (ka, qa) = at(-1.0);
        let (kb, qb) = at(1.0);
        let fa = f_n(n, s, ka, qa).expect("checked");
        let fb = f_n(n, s, kb, qb).expect("checked");
        let fm = f_n(n, s, k, q).expect("checked");
        let margin = 0.5 * (fa + fb) - fm;
        let rel = margin / fm.abs();
        let failed = margin < 1e-12 * fm.abs();
        let class = classify(n, s, dk, dq, k, q);
        out.segments += 1;
        let slot = &mut out.classes[class.index()];
        slot.0 += 1;
        slot.2 = slot.2.min(rel);
        if failed {
            out.failures += 1;
            slot.1 += 1;
        }
        if rel < out.worst {
            out.worst = rel;
            out.worst_segment = Some([ka, qa, kb, qb]);
        }
    }
    out
}

/// Samples `samples` random segments in the clipped domain of `fₙ` on the
/// chosen surface and tests `fₙ(mid) ≤ (fₙ(a) + fₙ(b))/2 − 1e−12·|fₙ(mid)|`.
/// About 30% of segments are vertical.
pub fn convexity_scan_f_n(
    n: u32,
    samples: usize,
    seed: u64,
    surface: ConvexitySurface,
) -> ConvexityScanReport {
    let s = surface.angle_sum(n);
    // kθ + k′θ′ ≤ n·max θ, so the clipped surface is empty when s exceeds it
    let empty_domain = s >= n as f64 * (FRAC_PI_2 - SCAN_CLIP_MARGIN);
    let parts: Vec<Partial> = if empty_domain {
        Vec::new()
    } else {
        chunk_sizes(samples)
            .into_par_iter()
            .enumerate()
            .map(|(chunk, count)| scan_chunk(n, s, count, seed, chunk as u64))
            .collect()
    };
    let mut total = Partial::new();
    for p in parts {
        total.merge(p);
    }
    let worst_hessian_det = match (surface, total.worst_segment) {
        (ConvexitySurface::PerN, Some([ka, qa, kb, qb])) => {
            PerimeterSurfacePoint::new(n, 0.5 * (ka + kb), 0.5 * (qa + qb))
                .ok()
                .and_then(|pt| hess_p(&pt).ok())
                .map(|h| h[0][0] * h[1][1] - h[0][1] * h[1][0])
        }
        _ => None,
    };
    ConvexityScanReport {
        n,
        surface,
        angle_sum: s,
        seed,
        clip_margin: SCAN_CLIP_MARGIN,
        requested: samples,
        segments: total.segments,
        attempts: total.attempts,
        empty_domain,
        passes: total.segments - total.failures,
        failures: total.failures,
        worst_relative_margin: total.worst,
        worst_segment: total.worst_segment,
        worst_hessian_det,
        by_class: LineClass::ALL
            .iter()
            .map(|&class| {
                let (segments, failures, worst) = total.classes[class.index()];
                LineClassStats {
                    class,
                    segments,
                    failures,
                    worst_relative_margin: worst,
                }
            })
            .collect(),
    }
}

//! The perimeter surfaces `Pₙ(k, q) = 2 √(k cot(q/k) + k′ cot(q′/k′))`.
//!
//! `Pₙ(k, q)` is the perimeter of the unit-area n-gon, circumscribed about a
//! circle, with `k` equal "large" angles of total `2q` and `k′ = n − k` equal
//! "small" angles of total `2q′`, where `q + q′ = (n − 2)π/2`. Half-angles are
//! `θ = q/k` and `θ′ = q′/k′`. `k` is a continuous variable.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use rand::Rng;

use super::finite_diff::{
    central_first, relative_error, richardson_second, second_difference_error,
    FIRST_DERIVATIVE_STEP, SECOND_DERIVATIVE_STEP,
};
use super::discriminants::DerivativeCheck;
use super::{AnalysisError, FD_INTERIOR_MARGIN};
use crate::sampling::substream;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PerimeterSurfacePoint {
    n: u32,
    k: f64,
    q: f64,
}

impl PerimeterSurfacePoint {
    pub fn new(n: u32, k: f64, q: f64) -> Result<Self, AnalysisError> {
        if !(3..=5).contains(&n) {
            return Err(AnalysisError::DomainViolation(format!(
                "n = {n} is not in {{3, 4, 5}}"
            )));
        }
        let pt = PerimeterSurfacePoint { n, k, q };
        let nf = n as f64;
        if !(k > 0.0 && k < nf) {
            return Err(AnalysisError::DomainViolation(format!(
                "k = {k} is not in (0, {n})"
            )));
        }
        let (th, thp) = (pt.theta(), pt.theta_prime());
        if !(th > 0.0 && th < FRAC_PI_2 && thp > 0.0 && thp < FRAC_PI_2) {
            return Err(AnalysisError::DomainViolation(format!(
                "half-angles θ = {th}, θ′ = {thp} must lie in (0, π/2)"
            )));
        }
        Ok(pt)
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn k(&self) -> f64 {
        self.k
    }
    pub fn q(&self) -> f64 {
        self.q
    }
    pub fn k_prime(&self) -> f64 {
        self.n as f64 - self.k
    }
    /// `(n − 2)π/2 − q`
    pub fn q_prime(&self) -> f64 {
        angle_budget(self.n) - self.q
    }
    pub fn theta(&self) -> f64 {
        self.q / self.k
    }
    pub fn theta_prime(&self) -> f64 {
        self.q_prime() / self.k_prime()
    }

    /// `k cot θ + k′ cot θ′ = Pₙ² / 4`
    pub fn radicand(&self) -> f64 {
        self.k / self.theta().tan() + self.k_prime() / self.theta_prime().tan()
    }
}

/// Total half-angle `(n − 2)π/2` of an n-gon.
pub fn angle_budget(n: u32) -> f64 {
    (n as f64 - 2.0) * PI / 2.0
}

/// `Pₙ(k, q)`.
pub fn eval_p(pt: &PerimeterSurfacePoint) -> Result<f64, AnalysisError> {
    let g = pt.radicand();
    if !(g > 0.0) || !g.is_finite() {
        return Err(AnalysisError::NegativeRadicand(g));
    }
    Ok(2.0 * g.sqrt())
}

/// Convenience wrapper around [`PerimeterSurfacePoint::new`] and [`eval_p`].
pub fn perimeter_at(n: u32, k: f64, q: f64) -> Result<f64, AnalysisError> {
    eval_p(&PerimeterSurfacePoint::new(n, k, q)?)
}

/// Analytic `(∂Pₙ/∂k, ∂Pₙ/∂q)`.
///
/// With `g = Pₙ²/4`, `t = cot θ`, `s = csc θ` (primes likewise):
/// `∂g/∂k = t + θs² − t′ − θ′s′²`, `∂g/∂q = s′² − s²`, and `∂Pₙ = ∂g / √g`.
pub fn grad_p(pt: &PerimeterSurfacePoint) -> Result<(f64, f64), AnalysisError> {
    let g = pt.radicand();
    if !(g > 0.0) || !g.is_finite() {
        return Err(AnalysisError::NegativeRadicand(g));
    }
    let (th, thp) = (pt.theta(), pt.theta_prime());
    let (t, tp) = (1.0 / th.tan(), 1.0 / thp.tan());
    let (s2, sp2) = (1.0 / th.sin().powi(2), 1.0 / thp.sin().powi(2));
    let dg_dk = t + th * s2 - tp - thp * sp2;
    let dg_dq = sp2 - s2;
    let root = g.sqrt();
    Ok((dg_dk / root, dg_dq / root))
}

/// Central-difference gradient of `Pₙ`; the independent oracle for [`grad_p`].
pub fn grad_p_numeric(pt: &PerimeterSurfacePoint, h: f64) -> Result<(f64, f64), AnalysisError> {
    let n = pt.n();
    // Probe validity once on the stencil corners so the closures cannot fail.
    for (dk, dq) in [(h, 0.0), (-h, 0.0), (0.0, h), (0.0, -h)] {
        PerimeterSurfacePoint::new(n, pt.k() + dk, pt.q() + dq)?;
    }
    let p = |k: f64, q: f64| perimeter_at(n, k, q).expect("stencil checked");
    let dk = central_first(|k| p(k, pt.q()), pt.k(), h);
    let dq = central_first(|q| p(pt.k(), q), pt.q(), h);
    Ok((dk, dq))
}

/// Worst relative disagreement between [`grad_p`] and its finite-difference
/// oracle at `pt`.
pub fn gradient_check(pt: &PerimeterSurfacePoint) -> Result<f64, AnalysisError> {
    let (ak, aq) = grad_p(pt)?;
    let (nk, nq) = grad_p_numeric(pt, FIRST_DERIVATIVE_STEP)?;
    Ok(relative_error(ak, nk).max(relative_error(aq, nq)))
}

/// Analytic Hessian `[[P_kk, P_kq], [P_kq, P_qq]]`.
///
/// `g_kk = 2θ²s²t/k + 2θ′²s′²t′/k′`, `g_kq = −2θs²t/k − 2θ′s′²t′/k′`,
/// `g_qq = 2s²t/k + 2s′²t′/k′`, then `P_ij = g_ij/√g − g_i g_j / (2 g^{3/2})`.
pub fn hess_p(pt: &PerimeterSurfacePoint) -> Result<[[f64; 2]; 2], AnalysisError> {
    let g = pt.radicand();
    if !(g > 0.0) || !g.is_finite() {
        return Err(AnalysisError::NegativeRadicand(g));
    }
    let (k, kp) = (pt.k(), pt.k_prime());
    let (th, thp) = (pt.theta(), pt.theta_prime());
    let (t, tp) = (1.0 / th.tan(), 1.0 / thp.tan());
    let (s2, sp2) = (1.0 / th.sin().powi(2), 1.0 / thp.sin().powi(2));
    let a = 2.0 * s2 * t / k;
    let b = 2.0 * sp2 * tp / kp;
    let gkk = th * th * a + thp * thp * b;
    let gkq = -th * a - thp * b;
    let gqq = a + b;
    let gk = t + th * s2 - tp - thp * sp2;
    let gq = sp2 - s2;
    let root = g.sqrt();
    let cube = g * root;
    let pkk = gkk / root - gk * gk / (2.0 * cube);
    let pkq = gkq / root - gk * gq / (2.0 * cube);
    let pqq = gqq / root - gq * gq / (2.0 * cube);
    Ok([[pkk, pkq], [pkq, pqq]])
}

/// Finite-difference Hessian of `Pₙ`: central stencils at steps `h` and
/// `h/2`, Richardson-extrapolated.
pub fn hess_p_numeric(pt: &PerimeterSurfacePoint, h: f64) -> Result<[[f64; 2]; 2], AnalysisError> {
    let n = pt.n();
    for dk in [-h, 0.0, h] {
        for dq in [-h, 0.0, h] {
            PerimeterSurfacePoint::new(n, pt.k() + dk, pt.q() + dq)?;
        }
    }
    let p = |k: f64, q: f64| perimeter_at(n, k, q).expect("stencil checked");
    let (k, q) = (pt.k(), pt.q());
    let pkk = richardson_second(|x| p(x, q), k, h);
    let pqq = richardson_second(|y| p(k, y), q, h);
    let mixed = |h: f64| {
        (p(k + h, q + h) - p(k + h, q - h) - p(k - h, q + h) + p(k - h, q - h)) / (4.0 * h * h)
    };
    let pkq = (4.0 * mixed(0.5 * h) - mixed(h)) / 3.0;
    Ok([[pkk, pkq], [pkq, pqq]])
}

/// Random point of the `n`-surface with both half-angles in
/// `[margin, π/2 − margin]`.
pub(crate) fn random_surface_point<R: Rng + ?Sized>(
    rng: &mut R,
    n: u32,
    margin: f64,
) -> PerimeterSurfacePoint {
    let nf = n as f64;
    loop {
        let k = rng.random_range(0.05..nf - 0.05);
        let theta = rng.random_range(margin..FRAC_PI_2 - margin);
        let q = k * theta;
        if let Ok(pt) = PerimeterSurfacePoint::new(n, k, q) {
            let thp = pt.theta_prime();
            if thp >= margin && thp <= FRAC_PI_2 - margin {
                return pt;
            }
        }
    }
}

/// Compares analytic first and second derivatives of `Pₙ` with central
/// differences at `points` random interior points (cycling `n` over 3, 4, 5).
pub fn surface_derivative_check(points: usize, seed: u64) -> DerivativeCheck {
    let mut rng = substream(seed, 0);
    let mut check = DerivativeCheck::new("surface", points, FD_INTERIOR_MARGIN);
    for i in 0..points {
        let n = 3 + (i % 3) as u32;
        let pt = random_surface_point(&mut rng, n, FD_INTERIOR_MARGIN);
        let (Ok(g), Ok(gn), Ok(h), Ok(hn)) = (
            grad_p(&pt),
            grad_p_numeric(&pt, FIRST_DERIVATIVE_STEP),
            hess_p(&pt),
            hess_p_numeric(&pt, SECOND_DERIVATIVE_STEP),
        ) else {
            check.record_error();
            continue;
        };
        check.record_first(relative_error(g.0, gn.0).max(relative_error(g.1, gn.1)));
        let value = eval_p(&pt).expect("interior point");
        let mut second = 0f64;
        for r in 0..2 {
            for c in 0..2 {
                second = second.max(second_difference_error(h[r][c], hn[r][c], value));
            }
        }
        check.record_second(second);
    }
    check
}

/// Round half away from zero to `places` decimals.
pub fn round_to(x: f64, places: i32) -> f64 {
    let m = 10f64.powi(places);
    (x * m).round() / m
}

/// One row of the derivative table at `(n, k, q)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivativeEntry {
    pub n: u32,
    pub k: f64,
    pub q: f64,
    pub dp_dk: f64,
    pub dp_dq: f64,
    pub dp_dk_rounded: f64,
    pub dp_dq_rounded: f64,
}

/// Partial derivatives of `Pₙ` at the three linearisation points
/// `(3, 1/2, π/8)`, `(4, 1, π/3)`, `(5, 3, π)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DerivativeTable {
    pub entries: Vec<DerivativeEntry>,
}

/// Linearisation points of the lower-bound argument.
pub fn linearisation_points() -> [(u32, f64, f64); 3] {
    [(3, 0.5, PI / 8.0), (4, 1.0, PI / 3.0), (5, 3.0, PI)]
}

/// Published four-decimal values of `(∂Pₙ/∂k, ∂Pₙ/∂q)` at the
/// [`linearisation_points`].
pub const PUBLISHED_DERIVATIVES: [(f64, f64); 3] =
    [(-0.7217, 1.2265), (-0.4455, 0.5334), (-0.3091, 0.3451)];

impl DerivativeTable {
    pub fn compute() -> Result<Self, AnalysisError> {
        let entries = linearisation_points()
            .iter()
            .map(|&(n, k, q)| {
                let (dp_dk, dp_dq) = grad_p(&PerimeterSurfacePoint::new(n, k, q)?)?;
                Ok(DerivativeEntry {
                    n,
                    k,
                    q,
                    dp_dk,
                    dp_dq,
                    dp_dk_rounded: round_to(dp_dk, 4),
                    dp_dq_rounded: round_to(dp_dq, 4),
                })
            })
            .collect::<Result<Vec<_>, AnalysisError>>()?;
        Ok(DerivativeTable { entries })
    }
}

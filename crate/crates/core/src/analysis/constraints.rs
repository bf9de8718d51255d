//! The large-angle bookkeeping identities.
//!
//! With polygon fractions `f₃ + f₄ + f₅ = 1`, mean edges per face
//! `e = 3f₃ + 4f₄ + 5f₅`, `kₙ` large angles per n-gon of mean half-angle
//! `θₙ`, the counting constraints
//!
//! ```text
//! Σ fₙkₙ = 3e − 12,    Σ fₙkₙθₙ = (π/3) Σ fₙkₙ
//! ```
//!
//! are equivalent to
//!
//! ```text
//! f₃(k₃ + 3) + f₄k₄ + f₅(k₅ − 3) = 0,
//! f₃(k₃θ₃ + π) + f₄k₄θ₄ + f₅(k₅θ₅ − π) = 0.
//! ```

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

use rand::Rng;
use serde::Serialize;

use super::AnalysisError;
use crate::sampling::substream;

/// Tolerance on the counting constraints accepted as input.
pub const PRECONDITION_TOLERANCE: f64 = 1e-9;
/// Tolerance on the derived identity.
pub const IDENTITY_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ConstraintTuple {
    pub f: [f64; 3],
    pub k: [f64; 3],
    pub theta: [f64; 3],
}

impl ConstraintTuple {
    pub fn mean_edges(&self) -> f64 {
        3.0 * self.f[0] + 4.0 * self.f[1] + 5.0 * self.f[2]
    }

    fn sum_fk(&self) -> f64 {
        (0..3).map(|i| self.f[i] * self.k[i]).sum()
    }

    fn sum_fktheta(&self) -> f64 {
        (0..3).map(|i| self.f[i] * self.k[i] * self.theta[i]).sum()
    }

    /// Residuals of the counting constraints.
    pub fn counting_residuals(&self) -> (f64, f64) {
        let sum_fk = self.sum_fk();
        (
            sum_fk - (3.0 * self.mean_edges() - 12.0),
            self.sum_fktheta() - FRAC_PI_3 * sum_fk,
        )
    }

    /// Residuals of the derived identity.
    pub fn identity_residuals(&self) -> (f64, f64) {
        let [f3, f4, f5] = self.f;
        let [k3, k4, k5] = self.k;
        let [t3, t4, t5] = self.theta;
        (
            f3 * (k3 + 3.0) + f4 * k4 + f5 * (k5 - 3.0),
            f3 * (k3 * t3 + PI) + f4 * k4 * t4 + f5 * (k5 * t5 - PI),
        )
    }
}

/// Whether the derived identity holds within 1e−12 for a tuple satisfying
/// the counting constraints.
pub fn constraint_identity_check(tuple: &ConstraintTuple) -> Result<bool, AnalysisError> {
    let f_sum: f64 = tuple.f.iter().sum();
    if tuple.f.iter().any(|&f| f < 0.0) || (f_sum - 1.0).abs() > PRECONDITION_TOLERANCE {
        return Err(AnalysisError::PreconditionViolation(format!(
            "fractions {:?} must be nonnegative and sum to 1",
            tuple.f
        )));
    }
    let (r1, r2) = tuple.counting_residuals();
    if r1.abs() > PRECONDITION_TOLERANCE || r2.abs() > PRECONDITION_TOLERANCE {
        return Err(AnalysisError::PreconditionViolation(format!(
            "counting constraints violated by ({r1:e}, {r2:e})"
        )));
    }
    let (i1, i2) = tuple.identity_residuals();
    Ok(i1.abs() <= IDENTITY_TOLERANCE && i2.abs() <= IDENTITY_TOLERANCE)
}

/// Random tuple on the counting-constraint surface: draw `f` (with
/// `f₅ ≥ 0.2`), `k₃ ∈ (0, 2)`, `k₄ ∈ (0, 3)`, `θ₃, θ₄ ∈ [π/4, π/2)`, then
/// solve the constraints for `k₅` and `θ₅`.
pub fn sample_constraint_tuple<R: Rng + ?Sized>(rng: &mut R) -> ConstraintTuple {
    loop {
        let w: [f64; 3] = std::array::from_fn(|_| -(1.0 - rng.random::<f64>()).ln());
        let total: f64 = w.iter().sum();
        let f = [w[0] / total, w[1] / total, w[2] / total];
        if f[2] < 0.2 {
            continue;
        }
        let k3 = rng.random_range(0.0..2.0);
        let k4 = rng.random_range(0.0..3.0);
        let t3 = rng.random_range(FRAC_PI_4..FRAC_PI_2);
        let t4 = rng.random_range(FRAC_PI_4..FRAC_PI_2);
        let e = 3.0 * f[0] + 4.0 * f[1] + 5.0 * f[2];
        let k5 = (3.0 * e - 12.0 - f[0] * k3 - f[1] * k4) / f[2];
        if k5 < 0.1 {
            continue;
        }
        let sum_fk = f[0] * k3 + f[1] * k4 + f[2] * k5;
        let t5 = (FRAC_PI_3 * sum_fk - f[0] * k3 * t3 - f[1] * k4 * t4) / (f[2] * k5);
        return ConstraintTuple {
            f,
            k: [k3, k4, k5],
            theta: [t3, t4, t5],
        };
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstraintScan {
    pub seed: u64,
    pub samples: usize,
    pub holds: usize,
    pub precondition_errors: usize,
    pub worst_residual: f64,
}

impl ConstraintScan {
    pub fn passed(&self) -> bool {
        self.samples > 0 && self.holds == self.samples
    }
}

/// Runs [`constraint_identity_check`] on `samples` sampled tuples.
pub fn constraint_identity_scan(samples: usize, seed: u64) -> ConstraintScan {
    let mut rng = substream(seed, 0);
    let mut scan = ConstraintScan {
        seed,
        samples,
        holds: 0,
        precondition_errors: 0,
        worst_residual: 0.0,
    };
    for _ in 0..samples {
        let t = sample_constraint_tuple(&mut rng);
        let (a, b) = t.identity_residuals();
        scan.worst_residual = scan.worst_residual.max(a.abs()).max(b.abs());
        match constraint_identity_check(&t) {
            Ok(true) => scan.holds += 1,
            Ok(false) => {}
            Err(_) => scan.precondition_errors += 1,
        }
    }
    scan
}

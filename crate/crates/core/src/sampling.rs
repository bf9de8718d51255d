//! Seeded random sampling shared by scans, property checks and the CLI.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::AngleSpec;

/// Deterministic generator for substream `stream` of `seed`.
///
/// Distinct streams are independent, so work split across threads stays
/// reproducible regardless of scheduling.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random valid angle spec with every angle in `[lo, hi]`.
///
/// Angles are `lo` plus a flat-Dirichlet share of the remaining budget
/// `(n − 2)π − n·lo`; draws with an angle above `hi` are rejected.
pub fn random_angle_spec<R: Rng + ?Sized>(rng: &mut R, n: usize, lo: f64, hi: f64) -> AngleSpec {
    assert!(n >= 3, "n must be at least 3");
    let total = (n as f64 - 2.0) * PI;
    let budget = total - n as f64 * lo;
    assert!(
        budget > 0.0 && n as f64 * hi > total,
        "no spec with n = {n} fits in [{lo}, {hi}]"
    );
    loop {
        let weights: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
        let sum: f64 = weights.iter().sum();
        let mut angles: Vec<f64> = weights.iter().map(|w| lo + budget * w / sum).collect();
        // absorb rounding so the sum is exact to the last ulp or two
        let drift = total - angles.iter().sum::<f64>();
        angles[n - 1] += drift;
        if angles.iter().all(|&a| a >= lo && a <= hi) {
            return AngleSpec::new(angles).expect("sampled spec satisfies invariants");
        }
    }
}

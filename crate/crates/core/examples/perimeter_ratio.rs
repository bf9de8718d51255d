//! Perimeter ratio ρ_R of each pattern against √(2 + √3), with the fitted
//! decay of the windowed deviation.
//!
//!     cargo run --release --example perimeter_ratio [R_max]

use std::time::Instant;

use pentile::tiling::{generate, per_tile_perimeter, ratio_convergence, Pattern};

fn main() {
    let r_max: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("R_max must be a number"))
        .unwrap_or(50.0);
    let radii: Vec<f64> = (1..=5).map(|i| r_max * i as f64 / 5.0).collect();
    let target = (2.0 + 3f64.sqrt()).sqrt();
    for name in ["cairo", "prismatic", "rows:CP", "rows:CPPP"] {
        let start = Instant::now();
        let pattern: Pattern = name.parse().unwrap();
        let patch = generate(&pattern, r_max).expect("generated patch validates");
        let report = ratio_convergence(&patch, &radii, target).unwrap();
        println!(
            "{name}: {} tiles, per-tile perimeter {:.10}, decay exponent {:.2} ({:.1?})",
            patch.len(),
            per_tile_perimeter(&patch).unwrap(),
            report.decay_exponent,
            start.elapsed()
        );
        for row in &report.rows {
            println!(
                "  R = {:5.1}  rho = {:.6}  |rho - target| = {:.2e}  windowed rms = {:.2e}",
                row.radius, row.rho, row.deviation, row.windowed_rms
            );
        }
    }
}

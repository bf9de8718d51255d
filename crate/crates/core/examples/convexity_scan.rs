//! Convexity discriminants along lines and midpoint-convexity scans of fₙ,
//! with failures broken down by line class.
//!
//!     cargo run --release --example convexity_scan [segments] [seed]

use pentile::analysis::{
    convexity_scan_f_n, vertical_scan, sloped_scan, ConvexitySurface, DInterpretation,
};

fn main() {
    let mut args = std::env::args().skip(1);
    let segments: usize = args.next().map_or(20_000, |s| s.parse().unwrap());
    let seed: u64 = args.next().map_or(2024, |s| s.parse().unwrap());

    let s = vertical_scan(10_000);
    println!("vertical lines: {} probes, min discriminant {:.3e}", s.probes, s.min_value);
    for interp in [DInterpretation::Shared, DInterpretation::Independent] {
        let s = sloped_scan(10_000, seed, interp);
        println!(
            "nonvertical lines, {interp:?} d: {} of {} probes non-positive, min {:.3e}",
            s.non_positive, s.probes, s.min_value
        );
        if let Some(f) = &s.first_failure {
            println!("  first failure: {f}");
        }
    }
    for n in 3..=5 {
        let r = convexity_scan_f_n(n, segments, seed, ConvexitySurface::PerN);
        println!("f{n}: {} segments, {} violations", r.segments, r.failures);
        for c in &r.by_class {
            println!(
                "  {:?}: {} segments, {} violations, worst margin {:.2e}",
                c.class, c.segments, c.failures, c.worst_relative_margin
            );
        }
        if let Some(det) = r.worst_hessian_det {
            println!("  Hessian determinant at the worst midpoint: {det:.3e}");
        }
    }
}

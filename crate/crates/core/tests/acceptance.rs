//! Acceptance criteria 1–10. Each test prints one `criterion N: PASS|FAIL`
//! line with the measured values, then asserts.
//!
//!     cargo test --release --test acceptance -- --nocapture --test-threads 1

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use pentile::analysis::{
    constraint_identity_scan, convexity_scan_f_n, gradient_check, vertical_scan, sloped_scan,
    q_bound_check, surface_derivative_check, ConvexitySurface, DInterpretation, DerivativeTable,
    PerimeterSurfacePoint, CONSTANT_TOLERANCE, PUBLISHED_DERIVATIVES,
};
use pentile::geometry::{
    circumscribed_polygon, closed_form_perimeter, make_prototile, scale_to_unit_area, AngleSpec,
    PrototileKind,
};
use pentile::sampling::{random_angle_spec, substream};
use pentile::tiling::{
    build_graph, euler_audit, generate, per_tile_perimeter, ratio_convergence, Pattern,
};

const SEED: u64 = 2024;
const PATTERNS: [&str; 4] = ["cairo", "prismatic", "rows:CP", "rows:CPPP"];

struct Outcome {
    ok: bool,
    elapsed: Duration,
    limit: Duration,
    detail: String,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.ok && self.elapsed <= self.limit
    }
}

fn report(ok: bool, elapsed: Duration, limit: Duration, detail: &str) -> Outcome {
    Outcome {
        ok,
        elapsed,
        limit,
        detail: detail.to_string(),
    }
}

/// Prints the criterion's single PASS/FAIL line.
fn check(n: u32, o: Outcome) {
    println!(
        "criterion {n}: {} ({:.2?} of {:?}) {}",
        if o.passed() { "PASS" } else { "FAIL" },
        o.elapsed,
        o.limit,
        o.detail
    );
    assert!(o.passed(), "criterion {n} failed: {}", o.detail);
}

fn unit_perimeter(spec: &AngleSpec) -> f64 {
    scale_to_unit_area(&circumscribed_polygon(spec).unwrap())
        .unwrap()
        .perimeter()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = substream(SEED, 1);
    let mut worst = 0f64;
    for i in 0..1000 {
        let spec = random_angle_spec(&mut rng, 3 + i % 6, 0.2, PI - 0.2);
        worst = worst.max((unit_perimeter(&spec) - closed_form_perimeter(&spec).unwrap()).abs());
    }
    report(worst < 1e-9, start.elapsed(), Duration::from_secs(1), &format!("worst {worst:.2e}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let s3 = 3f64.sqrt();
    let cairo = make_prototile(PrototileKind::Cairo);
    let prismatic = make_prototile(PrototileKind::Prismatic);
    // constructed value, closed form, printed figure, decimals printed
    let rows = [
        (unit_perimeter(&AngleSpec::regular(4).unwrap()), 4.0, 4.0, 0),
        (
            unit_perimeter(&AngleSpec::regular(5).unwrap()),
            2.0 * (5.0 / (0.3 * PI).tan()).sqrt(),
            3.81,
            2,
        ),
        (cairo.shape.perimeter(), 2.0 * (2.0 + s3).sqrt(), 3.86, 2),
        (prismatic.shape.perimeter(), 2.0 * (2.0 + s3).sqrt(), 3.86, 2),
        (cairo.short_edge, 2.0 / 3.0 * (6.0 - 3.0 * s3).sqrt(), 0.5977, 4),
        (cairo.long_edge, (2.0f64 / 3.0).sqrt(), 0.8165, 4),
        (prismatic.base.unwrap(), 2.0 * (2.0 - s3).sqrt(), 1.0353, 4),
    ];
    let mut ok = true;
    let mut worst = 0f64;
    for (built, closed, printed, decimals) in rows {
        let err = (built - closed).abs();
        worst = worst.max(err);
        let m = 10f64.powi(decimals);
        ok &= err < 5e-5 && ((closed * m).round() / m - printed).abs() < 1e-12;
    }
    report(ok,
        start.elapsed(),
        Duration::from_secs(1),
        &format!("worst construction vs closed form {worst:.1e}; regular pentagon {:.6}", rows[1].1),
    )
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let table = DerivativeTable::compute().unwrap();
    let mut ok = true;
    for (e, &(pk, pq)) in table.entries.iter().zip(&PUBLISHED_DERIVATIVES) {
        ok &= e.dp_dk_rounded == pk && e.dp_dq_rounded == pq;
    }
    let mut worst_table_fd = 0f64;
    for e in &table.entries {
        let pt = PerimeterSurfacePoint::new(e.n, e.k, e.q).unwrap();
        worst_table_fd = worst_table_fd.max(gradient_check(&pt).unwrap());
    }
    let fd = surface_derivative_check(1000, SEED);
    ok &= worst_table_fd <= 1e-6 && fd.worst_first <= 1e-6;
    report(ok,
        start.elapsed(),
        Duration::from_secs(1),
        &format!(
            "table matches: {}; gradient FD worst {:.1e} (table), {:.1e} (1000 random points)",
            ok, worst_table_fd, fd.worst_first
        ),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let r = q_bound_check();
    let q3_err = (r.q3.constant_four_decimal - 4.3718).abs();
    let q4_err = (r.q4.constant_four_decimal - 3.9622).abs();
    let ok = r.p3_linearisation.holds
        && r.q3.exceeds_reference
        && r.q4.exceeds_reference
        && q3_err <= CONSTANT_TOLERANCE
        && q4_err <= CONSTANT_TOLERANCE;
    report(ok,
        start.elapsed(),
        Duration::from_secs(1),
        &format!(
            "P3 = {:.6}; Q3 min {:.4} > {:.4}, constant {:.4} vs 4.3718 (err {:.1e}); Q4 min {:.4}, constant {:.4} vs 3.9622 (err {:.1e})",
            r.p3_linearisation.computed,
            r.q3.min_over_domain,
            r.reference,
            r.q3.constant_four_decimal,
            q3_err,
            r.q4.min_over_domain,
            r.q4.constant_four_decimal,
            q4_err
        ),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let l32 = vertical_scan(10_000);
    let shared = sloped_scan(10_000, SEED, DInterpretation::Shared);
    let independent = sloped_scan(10_000, SEED, DInterpretation::Independent);
    let mut ok = l32.passed() && shared.passed() && independent.passed();
    let mut parts = vec![
        format!("vertical {}/{} positive", l32.positive, l32.probes),
        format!("sloped shared {}/{}", shared.positive, shared.probes),
        format!("independent {}/{}", independent.positive, independent.probes),
    ];
    for n in 3..=5 {
        let s = convexity_scan_f_n(n, 100_000, SEED, ConvexitySurface::PerN);
        ok &= s.passed();
        parts.push(format!("f{n} {} violations", s.failures));
    }
    report(ok, start.elapsed(), Duration::from_secs(30), &parts.join(", "))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let s = constraint_identity_scan(1000, SEED);
    report(s.passed(),
        start.elapsed(),
        Duration::from_secs(1),
        &format!("{}/{} hold, worst residual {:.1e}", s.holds, s.samples, s.worst_residual),
    )
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let target = 2.0 * (2.0 + 3f64.sqrt()).sqrt();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in PATTERNS {
        match generate(&name.parse::<Pattern>().unwrap(), 20.0) {
            Ok(patch) => {
                let area = patch.tiles.iter().map(|t| (t.area() - 1.0).abs()).fold(0.0, f64::max);
                let per = per_tile_perimeter(&patch).unwrap();
                ok &= area <= 1e-7 && (per - target).abs() <= 1e-7;
                parts.push(format!("{name}: {} tiles, area err {area:.1e}, perimeter err {:.1e}", patch.len(), (per - target).abs()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{name}: {e}"));
            }
        }
    }
    report(ok, start.elapsed(), Duration::from_secs(30), &parts.join("; "))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let target = (2.0 + 3f64.sqrt()).sqrt();
    let radii = [10.0, 20.0, 30.0, 40.0, 50.0];
    let mut ok = true;
    let mut parts = Vec::new();
    for name in PATTERNS {
        let patch = generate(&name.parse::<Pattern>().unwrap(), 50.0).unwrap();
        let rep = ratio_convergence(&patch, &radii, target).unwrap();
        let last = rep.rows.last().unwrap();
        let first = &rep.rows[0];
        let within = (last.rho - target).abs() <= 0.02 * target;
        let shrinks = last.windowed_rms < first.windowed_rms;
        ok &= within && shrinks && rep.decay_exponent <= -0.8;
        parts.push(format!(
            "{name}: rho(50) = {:.5}, rms {:.1e} -> {:.1e}, exponent {:.2}",
            last.rho, first.windowed_rms, last.windowed_rms, rep.decay_exponent
        ));
    }
    report(ok, start.elapsed(), Duration::from_secs(120), &parts.join("; "))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut parts = Vec::new();
    for name in PATTERNS {
        let graph = build_graph(&generate(&name.parse::<Pattern>().unwrap(), 20.0).unwrap()).unwrap();
        let a = euler_audit(&graph).unwrap();
        let root_f = (a.interior.faces as f64).sqrt();
        if name == "cairo" {
            ok &= a.interior.e == 5.0 && (a.v3 - 3.0).abs() * root_f <= pentile::tiling::BOUNDARY_CONSTANT;
        }
        if a.edge_to_edge {
            ok &= a.interior.euler_characteristic == 1;
        }
        parts.push(format!(
            "{name}: e = {}, v3 = {}, interior V - E + F = {}, V* = {}",
            a.interior.e, a.v3, a.interior.euler_characteristic, a.v_star
        ));
    }
    report(ok, start.elapsed(), Duration::from_secs(10), &parts.join("; "))
}

#[test]
fn criterion_01_closed_form_agreement() {
    check(1, criterion_1());
}

#[test]
fn criterion_02_published_constants() {
    check(2, criterion_2());
}

#[test]
fn criterion_03_derivative_table() {
    check(3, criterion_3());
}

#[test]
fn criterion_04_q_bound_chains() {
    check(4, criterion_4());
}

#[test]
fn criterion_05_convexity() {
    check(5, criterion_5());
}

#[test]
fn criterion_06_constraint_identity() {
    check(6, criterion_6());
}

#[test]
fn criterion_07_tiling_generation() {
    check(7, criterion_7());
}

#[test]
fn criterion_08_perimeter_ratio() {
    check(8, criterion_8());
}

#[test]
fn criterion_09_euler_audit() {
    check(9, criterion_9());
}

/// Global minimality is not computable; it stands or falls with the
/// numerical ingredients checked by criteria 3 to 6.
#[test]
fn criterion_10_certified_through_3_to_6() {
    let start = Instant::now();
    let parts = [criterion_3(), criterion_4(), criterion_5(), criterion_6()];
    let status: Vec<String> = parts
        .iter()
        .zip(3..)
        .map(|(o, n)| format!("{n}: {}", if o.passed() { "pass" } else { "fail" }))
        .collect();
    check(
        10,
        report(parts.iter().all(Outcome::passed),
            start.elapsed(),
            Duration::from_secs(60),
            &format!("not computable directly; ingredients {}", status.join(", ")),
        ),
    );
}

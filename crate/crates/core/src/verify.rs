//! Runs every numerical check of the library and collects the outcomes in a
//! [`VerificationReport`].

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::{
    constraint_identity_scan, convexity_scan_f_n, vertical_derivative_check, vertical_scan,
    sloped_derivative_check, sloped_scan, q_bound_check, surface_derivative_check,
    ConvexitySurface, DInterpretation, DerivativeTable, QChain, PUBLISHED_DERIVATIVES,
};
use crate::geometry::{
    circumscribed_polygon, closed_form_perimeter, long_edge_length, make_prototile,
    optimal_pentagon_perimeter, prismatic_base_length, scale_to_unit_area, short_edge_length,
    AngleSpec, PrototileKind,
};
use crate::sampling::{random_angle_spec, substream};
use crate::tiling::{
    build_graph, euler_audit, generate, per_tile_perimeter, ratio_convergence, Pattern,
    TilingPatch,
};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const DEFAULT_SEED: u64 = 2024;

/// Sample sizes and window radii for a verification run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub polygon_specs: usize,
    pub derivative_points: usize,
    pub discriminant_probes: usize,
    pub convexity_segments: usize,
    pub constraint_samples: usize,
    pub tiling_radius: f64,
    pub ratio_radius: f64,
}

impl VerifyConfig {
    /// The sample sizes the acceptance thresholds are stated for.
    pub fn full(seed: u64) -> Self {
        VerifyConfig {
            seed,
            polygon_specs: 1000,
            derivative_points: 1000,
            discriminant_probes: 10_000,
            convexity_segments: 100_000,
            constraint_samples: 1000,
            tiling_radius: 20.0,
            ratio_radius: 50.0,
        }
    }

    /// About a tenth of the work, for smoke tests.
    pub fn quick(seed: u64) -> Self {
        VerifyConfig {
            seed,
            polygon_specs: 200,
            derivative_points: 100,
            discriminant_probes: 1000,
            convexity_segments: 10_000,
            constraint_samples: 200,
            tiling_radius: 8.0,
            ratio_radius: 20.0,
        }
    }
}

/// A computed value checked against a reference.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Comparison {
    pub name: String,
    pub computed: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub ok: bool,
}

impl Comparison {
    pub fn new(name: &str, computed: f64, expected: f64, tolerance: f64) -> Self {
        Comparison {
            name: name.to_string(),
            computed,
            expected,
            tolerance,
            ok: (computed - expected).abs() <= tolerance,
        }
    }

    fn reevaluate(&mut self) {
        self.ok = (self.computed - self.expected).abs() <= self.tolerance;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub seed: Option<u64>,
    pub comparisons: Vec<Comparison>,
    /// The full report of the underlying check.
    pub values: Value,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub config: VerifyConfig,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.id.as_str())
            .collect()
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One line per check, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = writeln!(out, "{tag}  {:<40} {}", c.id, c.detail);
            for m in c.comparisons.iter().filter(|m| !m.ok) {
                let _ = writeln!(
                    out,
                    "        {}: computed {} expected {} ± {}",
                    m.name, m.computed, m.expected, m.tolerance
                );
            }
        }
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed (seed {})",
            self.summary.total, self.summary.passed, self.summary.failed, self.config.seed
        );
        out
    }
}

/// Which checks to run and whether to sabotage one.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerifyOptions {
    /// Only run checks whose id starts with this prefix.
    pub only: Option<String>,
    /// Shift the reference value of this check's first comparison, to
    /// exercise the failure path.
    pub inject_fault: Option<String>,
}

struct Check {
    id: String,
    run: Box<dyn Fn(&VerifyConfig) -> Outcome>,
}

struct Outcome {
    passed: bool,
    seeded: bool,
    comparisons: Vec<Comparison>,
    values: Value,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, values: impl Serialize, detail: String) -> Self {
        Outcome {
            passed,
            seeded: false,
            comparisons: Vec::new(),
            values: serde_json::to_value(values).expect("serialisable"),
            detail,
        }
    }

    fn seeded(mut self) -> Self {
        self.seeded = true;
        self
    }

    fn with(mut self, comparisons: Vec<Comparison>) -> Self {
        self.comparisons = comparisons;
        self
    }
}

fn check(id: impl Into<String>, run: impl Fn(&VerifyConfig) -> Outcome + 'static) -> Check {
    Check {
        id: id.into(),
        run: Box::new(run),
    }
}

fn pattern_slug(p: &str) -> String {
    p.replace(':', "_").to_ascii_lowercase()
}

const PATTERNS: [&str; 4] = ["cairo", "prismatic", "rows:CP", "rows:CPPP"];

fn geometry_checks() -> Vec<Check> {
    vec![
        check("geometry.closed_form_agreement", |cfg| {
            let mut rng = substream(cfg.seed, 1);
            let mut worst = 0f64;
            for i in 0..cfg.polygon_specs {
                let n = 3 + i % 6;
                let spec = random_angle_spec(&mut rng, n, 0.2, PI - 0.2);
                let measured = circumscribed_polygon(&spec)
                    .and_then(|p| scale_to_unit_area(&p))
                    .map(|p| p.perimeter());
                let closed = closed_form_perimeter(&spec);
                worst = match (measured, closed) {
                    (Ok(m), Ok(c)) => worst.max((m - c).abs()),
                    _ => f64::INFINITY,
                };
            }
            let c = Comparison::new("worst |measured - closed form|", worst, 0.0, 1e-9);
            Outcome::new(
                c.ok,
                json!({"specs": cfg.polygon_specs, "worst": worst}),
                format!("{} specs, worst {worst:.1e}", cfg.polygon_specs),
            )
            .seeded()
            .with(vec![c])
        }),
        check("geometry.published_constants", |_| {
            let unit = |spec: AngleSpec| {
                circumscribed_polygon(&spec)
                    .and_then(|p| scale_to_unit_area(&p))
                    .map(|p| p.perimeter())
                    .unwrap_or(f64::NAN)
            };
            let cairo = make_prototile(PrototileKind::Cairo);
            let prismatic = make_prototile(PrototileKind::Prismatic);
            let tol = 5e-5;
            let comparisons = vec![
                Comparison::new("unit square perimeter", unit(AngleSpec::regular(4).unwrap()), 4.0, tol),
                Comparison::new("regular pentagon perimeter", unit(AngleSpec::regular(5).unwrap()), 3.8119, tol),
                Comparison::new("Cairo perimeter", cairo.shape.perimeter(), 3.8637, tol),
                Comparison::new("Prismatic perimeter", prismatic.shape.perimeter(), 3.8637, tol),
                Comparison::new("2 sqrt(2 + sqrt 3)", optimal_pentagon_perimeter(), 3.8637, tol),
                Comparison::new("short edge a", cairo.short_edge, 0.5977, tol),
                Comparison::new("long edge b", cairo.long_edge, 0.8165, tol),
                Comparison::new("closed-form a", short_edge_length(), 0.5977, tol),
                Comparison::new("closed-form b", long_edge_length(), 0.8165, tol),
                Comparison::new("Prismatic base", prismatic.base.unwrap_or(f64::NAN), 1.0353, tol),
                Comparison::new("closed-form base", prismatic_base_length(), 1.0353, tol),
            ];
            Outcome::new(true, Value::Null, format!("{} constants", comparisons.len()))
                .with(comparisons)
        }),
    ]
}

fn chain_outcome(q: &QChain) -> Outcome {
    let comparisons = vec![Comparison::new(
        "four-decimal constant",
        q.constant_four_decimal,
        q.printed_constant,
        crate::analysis::CONSTANT_TOLERANCE,
    )];
    let bad_roundings = q.roundings.iter().filter(|r| !r.valid).count();
    Outcome::new(
        q.chain_step_holds && q.bracket_positive && q.exceeds_reference && bad_roundings == 0,
        q,
        format!(
            "constant {:.4} (printed {:.4}), bracket {:.5}, min {:.4}, {} bad roundings",
            q.constant_four_decimal, q.printed_constant, q.bracket, q.min_over_domain, bad_roundings
        ),
    )
    .with(comparisons)
}

fn analysis_checks() -> Vec<Check> {
    let mut checks = vec![
        check("analysis.derivative_table", |_| match DerivativeTable::compute() {
            Ok(table) => {
                let mut comparisons = Vec::new();
                for (e, &(pk, pq)) in table.entries.iter().zip(&PUBLISHED_DERIVATIVES) {
                    comparisons.push(Comparison::new(&format!("dP{}/dk", e.n), e.dp_dk_rounded, pk, 1e-12));
                    comparisons.push(Comparison::new(&format!("dP{}/dq", e.n), e.dp_dq_rounded, pq, 1e-12));
                }
                Outcome::new(true, &table, "six partials at four decimals".into()).with(comparisons)
            }
            Err(e) => Outcome::new(false, Value::Null, e.to_string()),
        }),
        check("analysis.surface_derivatives_fd", |cfg| {
            let c = surface_derivative_check(cfg.derivative_points, cfg.seed);
            Outcome::new(
                c.passed(),
                &c,
                format!("worst first {:.1e}, second {:.1e}", c.worst_first, c.worst_second),
            )
            .seeded()
        }),
        check("analysis.p3_linearisation", |_| {
            let r = q_bound_check();
            let b = &r.p3_linearisation;
            Outcome::new(b.holds, b, format!("{:.6} > {}", b.computed, b.threshold))
        }),
        check("analysis.q3_chain", |_| chain_outcome(&q_bound_check().q3)),
        check("analysis.q4_chain", |_| chain_outcome(&q_bound_check().q4)),
        check("analysis.vertical_discriminant", |cfg| {
            let s = vertical_scan(cfg.discriminant_probes);
            Outcome::new(
                s.passed(),
                &s,
                format!("{} probes, {} non-positive, min {:.3e}", s.probes, s.non_positive, s.min_value),
            )
        }),
        check("analysis.vertical_fd", |cfg| {
            let c = vertical_derivative_check(cfg.derivative_points, cfg.seed);
            Outcome::new(
                c.passed(),
                &c,
                format!("worst first {:.1e}, second {:.1e}", c.worst_first, c.worst_second),
            )
            .seeded()
        }),
    ];
    for (slug, interp) in [
        ("shared", DInterpretation::Shared),
        ("independent", DInterpretation::Independent),
    ] {
        checks.push(check(format!("analysis.sloped_discriminant.{slug}"), move |cfg| {
            let s = sloped_scan(cfg.discriminant_probes, cfg.seed, interp);
            Outcome::new(
                s.passed(),
                &s,
                format!("{} probes, {} non-positive, min {:.3e}", s.probes, s.non_positive, s.min_value),
            )
            .seeded()
        }));
    }
    checks.push(check("analysis.sloped_fd", |cfg| {
        let c = sloped_derivative_check(cfg.derivative_points, cfg.seed);
        Outcome::new(
            c.passed(),
            &c,
            format!("worst first {:.1e}, second {:.1e}", c.worst_first, c.worst_second),
        )
        .seeded()
    }));
    for (slug, surface) in [
        ("per_n", ConvexitySurface::PerN),
        ("printed", ConvexitySurface::Printed),
    ] {
        for n in 3..=5u32 {
            checks.push(check(format!("analysis.convexity.{slug}.f{n}"), move |cfg| {
                let r = convexity_scan_f_n(n, cfg.convexity_segments, cfg.seed, surface);
                let detail = if r.empty_domain {
                    "clipped domain is empty".to_string()
                } else {
                    format!(
                        "{} segments, {} violations, worst margin {:.2e}",
                        r.segments, r.failures, r.worst_relative_margin
                    )
                };
                Outcome::new(r.passed(), &r, detail).seeded()
            }));
        }
    }
    checks.push(check("analysis.constraint_identity", |cfg| {
        let s = constraint_identity_scan(cfg.constraint_samples, cfg.seed);
        Outcome::new(
            s.passed(),
            &s,
            format!("{}/{} hold, worst residual {:.1e}", s.holds, s.samples, s.worst_residual),
        )
        .seeded()
    }));
    checks
}

fn generated(pattern: &str, radius: f64) -> Result<TilingPatch, String> {
    let p: Pattern = pattern.parse().map_err(|e: crate::tiling::TilingError| e.to_string())?;
    generate(&p, radius).map_err(|e| e.to_string())
}

fn tiling_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for name in PATTERNS {
        checks.push(check(format!("tiling.generate.{}", pattern_slug(name)), move |cfg| {
            let patch = match generated(name, cfg.tiling_radius) {
                Ok(p) => p,
                Err(e) => return Outcome::new(false, Value::Null, e),
            };
            let worst_area = patch
                .tiles
                .iter()
                .map(|t| (t.area() - 1.0).abs())
                .fold(0.0, f64::max);
            let comparisons = vec![
                Comparison::new("worst |area - 1|", worst_area, 0.0, 1e-7),
                Comparison::new(
                    "per-tile perimeter",
                    per_tile_perimeter(&patch).unwrap_or(f64::NAN),
                    optimal_pentagon_perimeter(),
                    1e-7,
                ),
            ];
            Outcome::new(
                true,
                json!({"radius": cfg.tiling_radius, "tiles": patch.len()}),
                format!("R = {}, {} tiles, valid", cfg.tiling_radius, patch.len()),
            )
            .with(comparisons)
        }));
        checks.push(check(format!("tiling.euler.{}", pattern_slug(name)), move |cfg| {
            let audit = generated(name, cfg.tiling_radius)
                .and_then(|p| build_graph(&p).map_err(|e| e.to_string()))
                .and_then(|g| euler_audit(&g).map_err(|e| e.to_string()));
            match audit {
                Ok(a) => {
                    let comparisons = vec![
                        Comparison::new("e", a.interior.e, 5.0, 1e-12),
                        Comparison::new("V*", a.v_star as f64, 0.0, 0.0),
                        Comparison::new("interior V - E + F", a.interior.euler_characteristic as f64, 1.0, 0.0),
                    ];
                    Outcome::new(
                        a.passed(),
                        &a,
                        format!(
                            "{} interior tiles, e = {}, v3 = {:.4}, sum v_d/d = {:.4}",
                            a.interior.faces, a.interior.e, a.v3, a.interior.sum_v_d_over_d
                        ),
                    )
                    .with(comparisons)
                }
                Err(e) => Outcome::new(false, Value::Null, e),
            }
        }));
        checks.push(check(format!("tiling.ratio.{}", pattern_slug(name)), move |cfg| {
            let target = optimal_pentagon_perimeter() / 2.0;
            let r = cfg.ratio_radius;
            let radii: Vec<f64> = (1..=5).map(|i| r * i as f64 / 5.0).collect();
            let report = generated(name, r)
                .and_then(|p| ratio_convergence(&p, &radii, target).map_err(|e| e.to_string()));
            match report {
                Ok(rep) => {
                    let last = rep.rows.last().expect("five radii");
                    let comparisons = vec![Comparison::new(
                        &format!("rho at R = {r}"),
                        last.rho,
                        target,
                        0.02 * target,
                    )];
                    Outcome::new(
                        rep.decay_exponent <= -0.8,
                        &rep,
                        format!("rho({r}) = {:.6}, decay exponent {:.2}", last.rho, rep.decay_exponent),
                    )
                    .with(comparisons)
                }
                Err(e) => Outcome::new(false, Value::Null, e),
            }
        }));
    }
    checks
}

fn all_checks() -> Vec<Check> {
    let mut v = geometry_checks();
    v.extend(analysis_checks());
    v.extend(tiling_checks());
    v
}

/// Ids of every check, in run order.
pub fn check_ids() -> Vec<String> {
    all_checks().into_iter().map(|c| c.id).collect()
}

/// Runs the selected checks. Checks run one after another; the scans
/// inside them are parallel but deterministic.
pub fn run_verification(config: &VerifyConfig, options: &VerifyOptions) -> VerificationReport {
    let mut records = Vec::new();
    for c in all_checks() {
        if let Some(prefix) = &options.only {
            if !c.id.starts_with(prefix.as_str()) {
                continue;
            }
        }
        let mut out = (c.run)(config);
        if options.inject_fault.as_deref() == Some(c.id.as_str()) {
            match out.comparisons.first_mut() {
                Some(m) => {
                    m.expected += 1.0;
                    m.reevaluate();
                }
                None => out.comparisons.push(Comparison::new("injected fault", 0.0, 1.0, 0.0)),
            }
            out.detail.push_str(" [fault injected]");
        }
        let ok = out.passed && out.comparisons.iter().all(|m| m.ok);
        records.push(CheckRecord {
            id: c.id,
            status: if ok { Status::Pass } else { Status::Fail },
            seed: out.seeded.then_some(config.seed),
            comparisons: out.comparisons,
            values: out.values,
            detail: out.detail,
        });
    }
    let passed = records.iter().filter(|r| r.status == Status::Pass).count();
    VerificationReport {
        schema: SCHEMA_VERSION,
        config: config.clone(),
        summary: Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        },
        checks: records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids = check_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(ids.iter().any(|i| i == "analysis.q3_chain"));
    }

    #[test]
    fn geometry_checks_pass() {
        let report = run_verification(
            &VerifyConfig::quick(7),
            &VerifyOptions {
                only: Some("geometry.".into()),
                inject_fault: None,
            },
        );
        assert_eq!(report.summary.total, 2);
        assert!(report.passed(), "{}", report.to_text());
        assert_eq!(report.check("geometry.closed_form_agreement").unwrap().seed, Some(7));
    }

    #[test]
    fn injected_fault_fails_the_named_check() {
        let report = run_verification(
            &VerifyConfig::quick(7),
            &VerifyOptions {
                only: Some("geometry.published".into()),
                inject_fault: Some("geometry.published_constants".into()),
            },
        );
        assert_eq!(report.failing_ids(), vec!["geometry.published_constants"]);
    }

    #[test]
    fn json_has_schema_version() {
        let report = run_verification(
            &VerifyConfig::quick(1),
            &VerifyOptions {
                only: Some("analysis.derivative_table".into()),
                inject_fault: None,
            },
        );
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["checks"][0]["status"], "pass");
    }
}

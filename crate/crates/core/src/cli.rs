//! The `pentile` command line.
//!
//! Exit codes are shared by every command: 0 success, 2 usage or parse
//! error, 3 patch validation failure, 4 domain error, 5 verification failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::geometry::{circumscribed_polygon, closed_form_perimeter, scale_to_unit_area, AngleSpec};
use crate::io::{load_patch, save_patch};
use crate::svg::{render_circumscribed, render_patch};
use crate::tiling::{
    build_graph, euler_audit, generate, per_tile_perimeter, perimeter_ratio, validate, Pattern,
    TilingError,
};
use crate::verify::{run_verification, VerifyConfig, VerifyOptions, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "pentile", version, about = "Least-perimeter polygons and pentagonal tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the unit-area polygon circumscribed about a circle with the given angles.
    Polygon {
        /// Interior angles in cyclic order, space or comma separated.
        #[arg(required = true, value_delimiter = ',', allow_negative_numbers = true)]
        angles: Vec<f64>,
        /// Read the angles as radians instead of degrees.
        #[arg(long)]
        radians: bool,
        /// Also draw the polygon and its incircle to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Generate and validate a patch and write it as JSON.
    Generate {
        /// cairo, prismatic, or rows:<word over C and P>
        pattern: String,
        /// Radius of the disc the patch must cover.
        radius: f64,
        out: PathBuf,
    },
    /// Perimeter ratios, per-tile perimeter and Euler audit of a patch file.
    Measure {
        patch: PathBuf,
        /// Disc radii for the ratio, comma separated. Defaults to the window radius.
        #[arg(long, value_delimiter = ',')]
        radii: Vec<f64>,
    },
    /// Run every numerical check and report.
    Verify {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
        /// Smaller samples and windows, for smoke tests.
        #[arg(long)]
        quick: bool,
        /// Only run checks whose id starts with this prefix.
        #[arg(long)]
        only: Option<String>,
        /// List the check ids and exit.
        #[arg(long)]
        list: bool,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Draw a patch file as SVG.
    Render { patch: PathBuf, out: PathBuf },
}

fn tiling_exit(e: &TilingError) -> i32 {
    match e {
        TilingError::Validation(_) => EXIT_VALIDATION,
        TilingError::Parse(_) => EXIT_USAGE,
        TilingError::DomainViolation(_)
        | TilingError::RadiusExceedsWindow { .. }
        | TilingError::InsufficientInterior
        | TilingError::MergeAmbiguity { .. } => EXIT_DOMAIN,
    }
}

fn polygon(
    angles: &[f64],
    radians: bool,
    svg: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let spec = if radians {
        AngleSpec::new(angles.to_vec())
    } else {
        AngleSpec::from_degrees(angles)
    };
    let result = spec.and_then(|spec| {
        let poly = circumscribed_polygon(&spec)?;
        let unit = scale_to_unit_area(&poly)?;
        Ok((spec, poly, unit))
    });
    let (spec, poly, unit) = match result {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "error: invalid angles: {e}");
            return EXIT_USAGE;
        }
    };
    let closed = closed_form_perimeter(&spec).unwrap_or(f64::NAN);
    let _ = writeln!(out, "unit-area vertices:");
    for v in unit.vertices() {
        let _ = writeln!(out, "  ({:.12}, {:.12})", v.x, v.y);
    }
    let _ = writeln!(out, "edge lengths:");
    for l in unit.edge_lengths() {
        let _ = writeln!(out, "  {l:.12}");
    }
    let _ = writeln!(out, "measured perimeter:    {:.12}", unit.perimeter());
    let _ = writeln!(out, "closed-form perimeter: {closed:.12}");
    if let Some(path) = svg {
        if let Err(e) = std::fs::write(path, render_circumscribed(&poly)) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    EXIT_OK
}

fn cmd_generate(pattern: &str, radius: f64, path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pattern: Pattern = match pattern.parse() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let patch = match generate(&pattern, radius) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return tiling_exit(&e);
        }
    };
    if let Err(e) = save_patch(&patch, path) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    let _ = writeln!(
        out,
        "{pattern}: {} tiles ({} cairo, {} prismatic) covering R = {radius}, written to {}",
        patch.len(),
        patch.count(crate::tiling::TileKind::Cairo),
        patch.count(crate::tiling::TileKind::Prismatic),
        path.display()
    );
    EXIT_OK
}

fn cmd_measure(path: &Path, radii: &[f64], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let patch = match load_patch(path) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = validate(&patch) {
        let _ = writeln!(err, "error: {e}");
        return tiling_exit(&e);
    }
    let radii = if radii.is_empty() {
        vec![patch.window_radius]
    } else {
        radii.to_vec()
    };
    let samples = match perimeter_ratio(&patch, &radii) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return tiling_exit(&e);
        }
    };
    let _ = writeln!(out, "{:>10}  {:>12}", "R", "rho_R");
    for s in &samples {
        let _ = writeln!(out, "{:>10}  {:>12.8}", s.radius, s.rho);
    }
    match per_tile_perimeter(&patch) {
        Ok(p) => {
            let _ = writeln!(out, "per-tile perimeter (interior tiles): {p:.12}");
        }
        Err(e) => {
            let _ = writeln!(out, "per-tile perimeter: skipped ({e})");
        }
    }
    let audit = build_graph(&patch).and_then(|g| euler_audit(&g));
    match audit {
        Ok(a) => {
            let _ = writeln!(
                out,
                "graph: V = {}, E = {}, F = {}, V* = {}, V - E + F = {}",
                a.v, a.e_count, a.f, a.v_star, a.euler_characteristic
            );
            let _ = writeln!(
                out,
                "interior: {} tiles, V - E + F = {}, e = {:.6}, v3 = {:.6} (bound 3e - 12 = {:.6}), sum v_d/d = {:.6} (e/2 - 1 = {:.6})",
                a.interior.faces,
                a.interior.euler_characteristic,
                a.interior.e,
                a.v3,
                a.v3_bound,
                a.interior.sum_v_d_over_d,
                a.target
            );
            let _ = writeln!(
                out,
                "euler audit: {} (boundary constants c = {:.3}, {:.3}, {:.3})",
                if a.passed() { "pass" } else { "fail" },
                a.c_degree_sum,
                a.c_vertex_ratio,
                a.c_v3
            );
        }
        Err(e) => {
            let _ = writeln!(out, "euler audit: skipped ({e})");
        }
    }
    EXIT_OK
}

fn cmd_render(path: &Path, target: &Path, err: &mut dyn Write) -> i32 {
    let patch = match load_patch(path) {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = std::fs::write(target, render_patch(&patch)) {
        let _ = writeln!(err, "error: cannot write {}: {e}", target.display());
        return EXIT_USAGE;
    }
    EXIT_OK
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match cli.command {
        Command::Polygon {
            angles,
            radians,
            svg,
        } => polygon(&angles, radians, svg.as_deref(), out, err),
        Command::Generate {
            pattern,
            radius,
            out: path,
        } => cmd_generate(&pattern, radius, &path, out, err),
        Command::Measure { patch, radii } => cmd_measure(&patch, &radii, out, err),
        Command::Verify {
            seed,
            json,
            quick,
            only,
            list,
            inject_fault,
        } => {
            if list {
                for id in crate::verify::check_ids() {
                    let _ = writeln!(out, "{id}");
                }
                return EXIT_OK;
            }
            let config = if quick {
                VerifyConfig::quick(seed)
            } else {
                VerifyConfig::full(seed)
            };
            let report = run_verification(&config, &VerifyOptions { only, inject_fault });
            let _ = if json {
                writeln!(out, "{}", report.to_json())
            } else {
                write!(out, "{}", report.to_text())
            };
            if report.passed() {
                EXIT_OK
            } else {
                let _ = writeln!(err, "failing checks: {}", report.failing_ids().join(", "));
                EXIT_VERIFICATION
            }
        }
        Command::Render { patch, out: target } => cmd_render(&patch, &target, err),
    }
}

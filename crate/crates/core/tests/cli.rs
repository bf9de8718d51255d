//! End-to-end runs of the `pentile` binary.

use std::path::Path;
use std::process::{Command, Output};

use pentile::io::{load_patch, save_patch};
use pentile::tiling::{generate, Pattern};

fn pentile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pentile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    pentile(args).status.code().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn polygon_prints_matching_perimeters() {
    let o = pentile(&["polygon", "90,90,90,90"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("measured perimeter:    4.000000000000"), "{text}");
    assert!(text.contains("closed-form perimeter: 4.000000000000"));
}

#[test]
fn bad_angles_are_a_usage_error() {
    assert_eq!(code(&["polygon", "90,90,90"]), 2);
    assert_eq!(code(&["polygon", "-10,100,90"]), 2);
}

#[test]
fn generate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    assert_eq!(code(&["generate", "rows:X", "10", s(&out)]), 2);
    assert_eq!(code(&["generate", "cairo", "2", s(&out)]), 4);
    assert_eq!(code(&["generate", "cairo", "--", "-1", s(&out)]), 4);
    assert!(!out.exists());
}

#[test]
fn generated_file_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    assert_eq!(code(&["generate", "cairo", "10", s(&out)]), 0);
    let loaded = load_patch(&out).unwrap();
    assert_eq!(loaded, generate(&Pattern::Cairo, 10.0).unwrap());
    // each tile has area 1 and they are kept while their centroid is within
    // R + 2, so the count sits near pi (R + 2)^2
    let expected = std::f64::consts::PI * 144.0;
    let n = loaded.len() as f64;
    assert!((n - expected).abs() < 0.05 * expected, "{n} tiles");
}

#[test]
fn measure_reports_and_fails_by_kind() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    assert_eq!(code(&["generate", "prismatic", "10", s(&good)]), 0);

    let o = pentile(&["measure", s(&good), "--radii", "6,8"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!o.stdout.is_empty());

    assert_eq!(code(&["measure", s(&good), "--radii", "11"]), 4);

    let corrupt = dir.path().join("corrupt.json");
    let text = std::fs::read_to_string(&good).unwrap();
    std::fs::write(&corrupt, &text[..text.len() / 2]).unwrap();
    assert_eq!(code(&["measure", s(&corrupt)]), 2);
    assert_eq!(code(&["measure", s(&dir.path().join("missing.json"))]), 2);

    let mut patch = load_patch(&good).unwrap();
    let victim = patch
        .tiles
        .iter()
        .position(|t| t.centroid().norm() < 1.0)
        .unwrap();
    patch.tiles.remove(victim);
    let holed = dir.path().join("holed.json");
    save_patch(&patch, &holed).unwrap();
    assert_eq!(code(&["measure", s(&holed)]), 3);
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let patch = dir.path().join("p.json");
    assert_eq!(code(&["generate", "rows:CPPP", "6", s(&patch)]), 0);
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    assert_eq!(code(&["render", s(&patch), s(&a)]), 0);
    assert_eq!(code(&["render", s(&patch), s(&b)]), 0);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn empty_patch_renders_without_tiles() {
    let dir = tempfile::tempdir().unwrap();
    let patch = dir.path().join("empty.json");
    std::fs::write(&patch, "{\"window_radius\": 0, \"tiles\": []}").unwrap();
    let svg = dir.path().join("empty.svg");
    assert_eq!(code(&["render", s(&patch), s(&svg)]), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<svg") && !text.contains("<path"));
}

#[test]
fn verify_quick_geometry_passes() {
    let o = pentile(&["verify", "--quick", "--only", "geometry"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn injected_fault_is_reported() {
    let o = pentile(&[
        "verify",
        "--quick",
        "--only",
        "geometry",
        "--inject-fault",
        "geometry.published_constants",
    ]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("geometry.published_constants"));
}

#[test]
fn json_report_carries_schema() {
    let o = pentile(&["verify", "--quick", "--only", "geometry", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert!(v["checks"].as_array().unwrap().len() >= 2);
}

#[test]
fn list_prints_every_id() {
    let o = pentile(&["verify", "--list"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().any(|l| l.trim() == "tiling.euler.cairo"));
}

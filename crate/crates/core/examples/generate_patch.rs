//! Generates a validated patch, writes it as JSON and SVG, and reads it back.
//!
//!     cargo run --example generate_patch -- rows:CPPP 15 /tmp/patch

use std::path::PathBuf;

use pentile::io::{load_patch, save_patch};
use pentile::svg::render_patch;
use pentile::tiling::{generate, Pattern, TileKind};

fn main() {
    let mut args = std::env::args().skip(1);
    let pattern: Pattern = args.next().as_deref().unwrap_or("rows:CP").parse().unwrap();
    let radius: f64 = args.next().map_or(10.0, |s| s.parse().unwrap());
    let stem = PathBuf::from(args.next().unwrap_or_else(|| "patch".into()));

    let patch = generate(&pattern, radius).unwrap_or_else(|e| panic!("{e}"));
    println!(
        "{pattern}, R = {radius}: {} tiles ({} Cairo, {} Prismatic)",
        patch.len(),
        patch.count(TileKind::Cairo),
        patch.count(TileKind::Prismatic)
    );
    let json = stem.with_extension("json");
    let svg = stem.with_extension("svg");
    save_patch(&patch, &json).unwrap();
    std::fs::write(&svg, render_patch(&patch)).unwrap();
    assert_eq!(load_patch(&json).unwrap(), patch);
    println!("wrote {} and {}", json.display(), svg.display());
}

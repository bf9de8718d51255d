//! Patch files: JSON with every coordinate written to 17 significant digits,
//! so a write/read cycle reproduces the patch bit for bit.
//!
//! ```json
//! {
//!   "window_radius": 1.0000000000000000e1,
//!   "tiles": [
//!     {"kind": "cairo",
//!      "isometry": {"rotation": ..., "translation": [x, y], "reflection": false},
//!      "vertices": [[x, y], ...]}
//!   ]
//! }
//! ```
//!
//! `isometry` is optional on input; when missing it is fitted from the
//! vertices.

use std::fmt::Write as _;
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use crate::geometry::{make_prototile, Isometry, Point};
use crate::tiling::{fit_isometry, PlacedTile, TileKind, TilingPatch};

#[derive(Debug, Error)]
pub enum PatchFileError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed patch file: {0}")]
    Malformed(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IsometryRecord {
    rotation: f64,
    translation: [f64; 2],
    reflection: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TileRecord {
    kind: TileKind,
    #[serde(default)]
    isometry: Option<IsometryRecord>,
    vertices: Vec<[f64; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PatchRecord {
    window_radius: f64,
    tiles: Vec<TileRecord>,
}

fn num(out: &mut String, x: f64) {
    if x.is_finite() {
        let _ = write!(out, "{x:.16e}");
    } else {
        // JSON has no infinities; emit something the reader rejects loudly
        out.push_str("null");
    }
}

/// Serialises `patch` in the patch file format.
pub fn write_patch(patch: &TilingPatch) -> String {
    let mut out = String::with_capacity(256 * patch.len() + 64);
    out.push_str("{\n  \"window_radius\": ");
    num(&mut out, patch.window_radius);
    out.push_str(",\n  \"tiles\": [");
    for (i, t) in patch.tiles.iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        let _ = write!(out, "{{\"kind\": \"{}\", \"isometry\": {{\"rotation\": ", t.kind);
        num(&mut out, t.isometry.rotation);
        out.push_str(", \"translation\": [");
        num(&mut out, t.isometry.translation.x);
        out.push_str(", ");
        num(&mut out, t.isometry.translation.y);
        let _ = write!(out, "], \"reflection\": {}}}, \"vertices\": [", t.isometry.reflection);
        for (j, v) in t.vertices.iter().enumerate() {
            out.push_str(if j == 0 { "[" } else { ", [" });
            num(&mut out, v.x);
            out.push_str(", ");
            num(&mut out, v.y);
            out.push(']');
        }
        out.push_str("]}");
    }
    out.push_str(if patch.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" });
    out
}

/// Parses a patch file. Structure is checked here; geometry is left to
/// [`crate::tiling::validate`].
pub fn read_patch(text: &str) -> Result<TilingPatch, PatchFileError> {
    let record: PatchRecord =
        serde_json::from_str(text).map_err(|e| PatchFileError::Malformed(e.to_string()))?;
    if !(record.window_radius >= 0.0) {
        return Err(PatchFileError::Malformed(format!(
            "window_radius {} is negative",
            record.window_radius
        )));
    }
    let tiles = record
        .tiles
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            let vertices: Vec<Point> = t.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect();
            if vertices.len() < 3 {
                return Err(PatchFileError::Malformed(format!(
                    "tile {i} has {} vertices",
                    vertices.len()
                )));
            }
            let isometry = match (t.isometry, t.kind.prototile()) {
                (Some(r), _) => Isometry {
                    rotation: r.rotation,
                    translation: Point::new(r.translation[0], r.translation[1]),
                    reflection: r.reflection,
                },
                (None, Some(kind)) => fit_isometry(make_prototile(kind).shape.vertices(), &vertices)
                    .map(|f| f.0)
                    .ok_or_else(|| {
                        PatchFileError::Malformed(format!(
                            "tile {i} has {} vertices but a {} tile has 5",
                            vertices.len(),
                            t.kind
                        ))
                    })?,
                (None, None) => Isometry::IDENTITY,
            };
            Ok(PlacedTile {
                kind: t.kind,
                isometry,
                vertices,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TilingPatch {
        window_radius: record.window_radius,
        tiles,
    })
}

pub fn save_patch(patch: &TilingPatch, path: &Path) -> Result<(), PatchFileError> {
    std::fs::write(path, write_patch(patch)).map_err(|source| PatchFileError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_patch(path: &Path) -> Result<TilingPatch, PatchFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| PatchFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_patch(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::{generate_unchecked, Pattern};

    #[test]
    fn round_trip_is_bit_exact() {
        let patch = generate_unchecked(&"rows:CP".parse::<Pattern>().unwrap(), 4.0);
        let back = read_patch(&write_patch(&patch)).unwrap();
        assert_eq!(back, patch);
    }

    #[test]
    fn seventeen_significant_digits() {
        let patch = TilingPatch::from_polygons(
            1.0,
            vec![vec![
                Point::new(0.1, 0.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0 / 3.0),
            ]],
        );
        let text = write_patch(&patch);
        assert!(text.contains("[1.0000000000000001e-1, 0.0000000000000000e0]"), "{text}");
        assert!(text.contains("3.3333333333333331e-1"));
    }

    #[test]
    fn missing_isometry_is_fitted() {
        let patch = generate_unchecked(&Pattern::Prismatic, 3.0);
        let t = &patch.tiles[0];
        let coords: Vec<String> = t
            .vertices
            .iter()
            .map(|v| format!("[{:.17e}, {:.17e}]", v.x, v.y))
            .collect();
        let text = format!(
            "{{\"window_radius\": 3, \"tiles\": [{{\"kind\": \"prismatic\", \"vertices\": [{}]}}]}}",
            coords.join(", ")
        );
        let back = read_patch(&text).unwrap();
        // the house is mirror-symmetric, so compare vertex sets, not motions
        let iso = back.tiles[0].isometry;
        let proto = make_prototile(crate::geometry::PrototileKind::Prismatic);
        for p in proto.shape.vertices() {
            let q = iso.apply(*p);
            assert!(t.vertices.iter().any(|v| v.distance(q) < 1e-12));
        }
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "",
            "{}",
            "{\"window_radius\": 1, \"tiles\": [{\"kind\": \"hexagon\", \"vertices\": []}]}",
            "{\"window_radius\": 1, \"tiles\": [{\"kind\": \"polygon\", \"vertices\": [[0, 0]]}]}",
            "{\"window_radius\": -1, \"tiles\": []}",
            "{\"window_radius\": 1, \"tiles\": [], \"extra\": 2}",
        ] {
            assert!(matches!(read_patch(text), Err(PatchFileError::Malformed(_))), "{text}");
        }
    }

    #[test]
    fn empty_patch_round_trips() {
        let patch = TilingPatch {
            window_radius: 0.0,
            tiles: vec![],
        };
        assert_eq!(read_patch(&write_patch(&patch)).unwrap(), patch);
    }
}

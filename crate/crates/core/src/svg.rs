//! SVG 1.1 output. Coordinates are printed with a fixed number of decimals,
//! so identical inputs give byte-identical files.

use std::fmt::Write as _;

use crate::geometry::{ConvexPolygon, Point};
use crate::tiling::{TileKind, TilingPatch};

const DECIMALS: usize = 6;
const CANVAS: f64 = 800.0;

fn fill(kind: TileKind) -> &'static str {
    match kind {
        TileKind::Cairo => "#e3b448",
        TileKind::Prismatic => "#6f9fc8",
        TileKind::Polygon => "#cccccc",
    }
}

fn header(out: &mut String, half: f64) {
    let _ = writeln!(
        out,
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{CANVAS}\" height=\"{CANVAS}\" viewBox=\"{x:.d$} {x:.d$} {w:.d$} {w:.d$}\">",
        x = -half,
        w = 2.0 * half,
        d = DECIMALS
    );
}

/// SVG y grows downwards; flip so the picture matches the math convention.
fn path(out: &mut String, vertices: &[Point], style: &str) {
    out.push_str("<path d=\"");
    for (i, v) in vertices.iter().enumerate() {
        let _ = write!(
            out,
            "{}{:.d$},{:.d$} ",
            if i == 0 { "M" } else { "L" },
            v.x,
            -v.y,
            d = DECIMALS
        );
    }
    let _ = writeln!(out, "Z\" {style}/>");
}

/// Renders every tile of `patch`, clipped to a square around the window disc,
/// with the window circle dashed on top. Cairo and Prismatic tiles get
/// different fills.
pub fn render_patch(patch: &TilingPatch) -> String {
    let r = if patch.window_radius > 0.0 {
        patch.window_radius
    } else {
        1.0
    };
    let half = 1.05 * r;
    let stroke = half / 400.0;
    let mut out = String::with_capacity(160 * patch.len() + 512);
    header(&mut out, half);
    let _ = writeln!(
        out,
        "<g stroke=\"#202020\" stroke-width=\"{stroke:.d$}\" stroke-linejoin=\"round\">",
        d = DECIMALS
    );
    for t in &patch.tiles {
        path(&mut out, &t.vertices, &format!("fill=\"{}\"", fill(t.kind)));
    }
    out.push_str("</g>\n");
    if !patch.is_empty() {
        let _ = writeln!(
            out,
            "<circle cx=\"0\" cy=\"0\" r=\"{r:.d$}\" fill=\"none\" stroke=\"#c03030\" \
             stroke-width=\"{w:.d$}\" stroke-dasharray=\"{dash:.d$}\"/>",
            w = 2.0 * stroke,
            dash = 8.0 * stroke,
            d = DECIMALS
        );
    }
    out.push_str("</svg>\n");
    out
}

/// A polygon circumscribed about the unit circle, with the circle and its
/// tangency points.
pub fn render_circumscribed(poly: &ConvexPolygon) -> String {
    let extent = poly
        .vertices()
        .iter()
        .map(|v| v.x.abs().max(v.y.abs()))
        .fold(1.0, f64::max);
    let half = 1.1 * extent;
    let stroke = half / 300.0;
    let mut out = String::new();
    header(&mut out, half);
    path(
        &mut out,
        poly.vertices(),
        &format!(
            "fill=\"#e3b448\" fill-opacity=\"0.4\" stroke=\"#202020\" stroke-width=\"{stroke:.d$}\"",
            d = DECIMALS
        ),
    );
    let _ = writeln!(
        out,
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"{stroke:.d$}\"/>",
        d = DECIMALS
    );
    for i in 0..poly.len() {
        let (a, b) = poly.edge(i);
        // the tangency point is the foot of the perpendicular from the centre
        let d = b - a;
        let t = -a.dot(d) / d.norm_squared();
        let p = a + d * t;
        let _ = writeln!(
            out,
            "<circle cx=\"{:.d$}\" cy=\"{:.d$}\" r=\"{:.d$}\" fill=\"#3060c0\"/>",
            p.x,
            -p.y,
            2.5 * stroke,
            d = DECIMALS
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{circumscribed_polygon, AngleSpec};
    use crate::tiling::{generate_unchecked, Pattern};

    #[test]
    fn empty_patch_has_no_paths() {
        let svg = render_patch(&TilingPatch {
            window_radius: 0.0,
            tiles: vec![],
        });
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn one_path_per_tile_and_two_fills() {
        let patch = generate_unchecked(&"rows:CP".parse::<Pattern>().unwrap(), 4.0);
        let svg = render_patch(&patch);
        assert_eq!(svg.matches("<path").count(), patch.len());
        assert_eq!(svg.matches(fill(TileKind::Cairo)).count(), patch.count(TileKind::Cairo));
        assert_eq!(
            svg.matches(fill(TileKind::Prismatic)).count(),
            patch.count(TileKind::Prismatic)
        );
        assert_eq!(svg, render_patch(&patch));
    }

    #[test]
    fn circumscribed_figure_marks_tangency_points() {
        let poly = circumscribed_polygon(&AngleSpec::regular(5).unwrap()).unwrap();
        let svg = render_circumscribed(&poly);
        assert_eq!(svg.matches("<circle").count(), 6);
        // edge 0 touches the circle at (1, 0)
        assert!(svg.contains("cx=\"1.000000\" cy=\"-0.000000\"") || svg.contains("cx=\"1.000000\" cy=\"0.000000\""));
    }
}

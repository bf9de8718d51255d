use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{circumscribed_polygon, scale_to_unit_area, AngleSpec, ConvexPolygon, GeometryError};

/// The two unit-area pentagons with two right angles and three angles of
/// 2π/3, circumscribed about a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrototileKind {
    /// Angles (2π/3, 2π/3, π/2, 2π/3, π/2) in cyclic order: one short edge
    /// and four equal long edges.
    Cairo,
    /// Angles (2π/3, 2π/3, 2π/3, π/2, π/2): a house with a two-edge roof,
    /// two walls, and a long base.
    Prismatic,
}

impl PrototileKind {
    pub const ALL: [PrototileKind; 2] = [PrototileKind::Cairo, PrototileKind::Prismatic];

    pub fn angle_spec(self) -> AngleSpec {
        let l = 2.0 * FRAC_PI_3;
        let r = FRAC_PI_2;
        let angles = match self {
            PrototileKind::Cairo => vec![l, l, r, l, r],
            PrototileKind::Prismatic => vec![l, l, l, r, r],
        };
        AngleSpec::new(angles).expect("prototile angles are valid")
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PrototileKind::Cairo => "cairo",
            PrototileKind::Prismatic => "prismatic",
        }
    }
}

impl fmt::Display for PrototileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PrototileKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cairo" => Ok(PrototileKind::Cairo),
            "prismatic" => Ok(PrototileKind::Prismatic),
            other => Err(format!("unknown prototile kind `{other}`")),
        }
    }
}

/// Short edge `a = (2/3)√(6 − 3√3)` shared by both prototiles.
pub fn short_edge_length() -> f64 {
    (2.0 / 3.0) * (6.0 - 3.0 * 3f64.sqrt()).sqrt()
}

/// Long edge `b = (3 + √3)√(2 − √3) / 3`.
pub fn long_edge_length() -> f64 {
    (3.0 + 3f64.sqrt()) * (2.0 - 3f64.sqrt()).sqrt() / 3.0
}

/// Prismatic base `2√(2 − √3)`.
pub fn prismatic_base_length() -> f64 {
    2.0 * (2.0 - 3f64.sqrt()).sqrt()
}

/// `2√(2 + √3)`, the perimeter of either unit-area prototile.
pub fn optimal_pentagon_perimeter() -> f64 {
    2.0 * (2.0 + 3f64.sqrt()).sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prototile {
    pub kind: PrototileKind,
    /// Unit-area shape, recentred so its centroid is the origin. Vertex
    /// order follows the angle sequence of [`PrototileKind::angle_spec`].
    pub shape: ConvexPolygon,
    pub short_edge: f64,
    pub long_edge: f64,
    /// Prismatic only.
    pub base: Option<f64>,
}

impl Prototile {
    /// Edge index of the short edge(s) and base in the canonical vertex order.
    pub fn short_edges(&self) -> &'static [usize] {
        match self.kind {
            PrototileKind::Cairo => &[0],
            PrototileKind::Prismatic => &[0, 1],
        }
    }
}

/// Builds the canonical Cairo or Prismatic prototile.
pub fn make_prototile(kind: PrototileKind) -> Prototile {
    let unit = circumscribed_polygon(&kind.angle_spec())
        .and_then(|p| scale_to_unit_area(&p))
        .expect("prototile construction cannot fail");
    let shape = recenter(&unit).expect("translation preserves validity");
    let lengths = shape.edge_lengths();
    let (short_edge, long_edge, base) = match kind {
        PrototileKind::Cairo => (lengths[0], lengths[1], None),
        PrototileKind::Prismatic => (lengths[0], lengths[2], Some(lengths[3])),
    };
    Prototile {
        kind,
        shape,
        short_edge,
        long_edge,
        base,
    }
}

fn recenter(poly: &ConvexPolygon) -> Result<ConvexPolygon, GeometryError> {
    let c = poly.centroid();
    Ok(poly.translated(-c))
}

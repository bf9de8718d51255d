use std::fmt;

use serde::{Deserialize, Serialize};

use crate::geometry::{signed_area, ConvexPolygon, Isometry, Point, PrototileKind};

/// What a placed tile is a copy of. `Polygon` marks free-form fixture tiles
/// (e.g. unit squares) that have no prototile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TileKind {
    Cairo,
    Prismatic,
    Polygon,
}

impl TileKind {
    pub fn prototile(self) -> Option<PrototileKind> {
        match self {
            TileKind::Cairo => Some(PrototileKind::Cairo),
            TileKind::Prismatic => Some(PrototileKind::Prismatic),
            TileKind::Polygon => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TileKind::Cairo => "cairo",
            TileKind::Prismatic => "prismatic",
            TileKind::Polygon => "polygon",
        }
    }
}

impl From<PrototileKind> for TileKind {
    fn from(k: PrototileKind) -> Self {
        match k {
            PrototileKind::Cairo => TileKind::Cairo,
            PrototileKind::Prismatic => TileKind::Prismatic,
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tile in the plane: its kind, the motion placing the canonical prototile,
/// and the resolved counterclockwise vertex loop.
#[derive(Clone, Debug, PartialEq)]
pub struct PlacedTile {
    pub kind: TileKind,
    pub isometry: Isometry,
    pub vertices: Vec<Point>,
}

impl PlacedTile {
    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].distance(self.vertices[(i + 1) % n]))
            .sum()
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point {
        let n = self.vertices.len();
        let (mut cx, mut cy, mut a2) = (0.0, 0.0, 0.0);
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            a2 += w;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        Point::new(cx / (3.0 * a2), cy / (3.0 * a2))
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    pub fn polygon(&self) -> Option<ConvexPolygon> {
        ConvexPolygon::new(self.vertices.clone()).ok()
    }

    /// Point-in-tile with `tol` slack on the boundary.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let e = self.vertices[(i + 1) % n] - a;
            e.cross(p - a) >= -tol * e.norm()
        })
    }
}

/// A finite piece of a tiling meant to cover the disc of radius
/// `window_radius` about the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct TilingPatch {
    pub window_radius: f64,
    pub tiles: Vec<PlacedTile>,
}

impl TilingPatch {
    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn count(&self, kind: TileKind) -> usize {
        self.tiles.iter().filter(|t| t.kind == kind).count()
    }

    /// Patch of free-form polygon tiles (test fixtures and imported data).
    pub fn from_polygons(window_radius: f64, loops: Vec<Vec<Point>>) -> Self {
        TilingPatch {
            window_radius,
            tiles: loops
                .into_iter()
                .map(|vertices| PlacedTile {
                    kind: TileKind::Polygon,
                    isometry: Isometry::IDENTITY,
                    vertices,
                })
                .collect(),
        }
    }
}

/// Best rigid motion taking `model` onto `target` with some cyclic vertex
/// correspondence (either orientation). Returns the motion and the largest
/// vertex displacement, or `None` if the vertex counts differ.
pub fn fit_isometry(model: &[Point], target: &[Point]) -> Option<(Isometry, f64)> {
    let n = model.len();
    if n != target.len() || n < 2 {
        return None;
    }
    let mut best: Option<(Isometry, f64)> = None;
    for reflection in [false, true] {
        let flip = |p: Point| if reflection { Point::new(p.x, -p.y) } else { p };
        for shift in 0..n {
            let q = |i: usize| {
                if reflection {
                    target[(shift + n - i % n) % n]
                } else {
                    target[(shift + i) % n]
                }
            };
            let (p0, p1) = (flip(model[0]), flip(model[1]));
            let a = Isometry::align(p0, p1 - p0, q(0), q(1) - q(0));
            let iso = Isometry {
                rotation: a.rotation,
                translation: a.translation,
                reflection,
            };
            let residual = (0..n)
                .map(|i| iso.apply(model[i]).distance(q(i)))
                .fold(0.0, f64::max);
            if best.as_ref().is_none_or(|b| residual < b.1) {
                best = Some((iso, residual));
            }
        }
    }
    best
}

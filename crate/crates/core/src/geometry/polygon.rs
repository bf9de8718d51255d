use std::f64::consts::PI;

use super::{GeometryError, Point, DEGENERACY_CUTOFF, GEOMETRIC_TOLERANCE};

/// Convex polygon stored as a counterclockwise vertex loop.
///
/// Clockwise input is reversed on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolygonMetrics {
    pub perimeter: f64,
    pub area: f64,
    pub edge_lengths: Vec<f64>,
    pub interior_angles: Vec<f64>,
}

impl ConvexPolygon {
    pub fn new(mut vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::DegeneratePolygon(format!(
                "{} vertices",
                vertices.len()
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(GeometryError::DegeneratePolygon(format!(
                "non-finite vertex {p:?}"
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            let d = vertices[i].distance(vertices[(i + 1) % n]);
            if d < DEGENERACY_CUTOFF {
                return Err(GeometryError::DegeneratePolygon(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % n
                )));
            }
        }
        let area = signed_area(&vertices);
        if area.abs() <= DEGENERACY_CUTOFF {
            return Err(GeometryError::DegeneratePolygon(format!(
                "zero area ({area:e})"
            )));
        }
        if area < 0.0 {
            vertices.reverse();
        }

        let scale2 = vertices
            .iter()
            .map(|p| p.norm_squared())
            .fold(0.0_f64, f64::max)
            .max(1.0);
        let mut turning = 0.0;
        for i in 0..n {
            let a = vertices[(i + n - 1) % n];
            let b = vertices[i];
            let c = vertices[(i + 1) % n];
            let u = b - a;
            let v = c - b;
            let cross = u.cross(v);
            if cross < -GEOMETRIC_TOLERANCE * scale2 {
                return Err(GeometryError::NotConvex { vertex: i });
            }
            turning += cross.atan2(u.dot(v));
        }
        // A convex loop that winds more than once is self-intersecting.
        if (turning - 2.0 * PI).abs() > 1e-6 {
            return Err(GeometryError::NotSimple);
        }
        Ok(ConvexPolygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edge_lengths().iter().sum()
    }

    /// `edge_lengths()[i]` is the length of the edge from vertex `i` to `i + 1`.
    pub fn edge_lengths(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].distance(self.vertices[(i + 1) % n]))
            .collect()
    }

    pub fn interior_angles(&self) -> Vec<f64> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let u = self.vertices[i] - self.vertices[(i + n - 1) % n];
                let v = self.vertices[(i + 1) % n] - self.vertices[i];
                PI - u.cross(v).atan2(u.dot(v))
            })
            .collect()
    }

    pub fn centroid(&self) -> Point {
        let n = self.vertices.len();
        let mut c = Point::ORIGIN;
        let mut a2 = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            a2 += w;
            c += (p + q) * w;
        }
        c * (1.0 / (3.0 * a2))
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<ConvexPolygon, GeometryError> {
        ConvexPolygon::new(self.vertices.iter().map(|&p| f(p)).collect())
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> Result<ConvexPolygon, GeometryError> {
        self.map(|p| p * factor)
    }

    pub fn translated(&self, t: Point) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&p| p + t).collect(),
        }
    }

    /// Point-in-polygon with `tol` slack on the boundary.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = b - a;
            e.cross(p - a) >= -tol * e.norm()
        })
    }

    /// Distance from `p` to the line through edge `i`.
    pub fn edge_line_distance(&self, i: usize, p: Point) -> f64 {
        let (a, b) = self.edge(i);
        let e = b - a;
        (e.cross(p - a) / e.norm()).abs()
    }
}

/// Metrics of a polygon: perimeter, shoelace area, edge lengths, interior angles.
pub fn polygon_metrics(poly: &ConvexPolygon) -> PolygonMetrics {
    let edge_lengths = poly.edge_lengths();
    PolygonMetrics {
        perimeter: edge_lengths.iter().sum(),
        area: poly.area(),
        edge_lengths,
        interior_angles: poly.interior_angles(),
    }
}

/// Shoelace area; positive for counterclockwise loops.
pub fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    0.5 * (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum::<f64>()
}

/// Area of the intersection of two convex counterclockwise loops
/// (Sutherland–Hodgman clipping).
pub fn convex_intersection_area(subject: &[Point], clip: &[Point]) -> f64 {
    let mut output: Vec<Point> = subject.to_vec();
    let m = clip.len();
    for i in 0..m {
        if output.is_empty() {
            return 0.0;
        }
        let a = clip[i];
        let b = clip[(i + 1) % m];
        let e = b - a;
        let input = std::mem::take(&mut output);
        let k = input.len();
        for j in 0..k {
            let p = input[j];
            let q = input[(j + 1) % k];
            let sp = e.cross(p - a);
            let sq = e.cross(q - a);
            if sp >= 0.0 {
                output.push(p);
            }
            if (sp >= 0.0) != (sq >= 0.0) {
                let t = sp / (sp - sq);
                output.push(p.lerp(q, t));
            }
        }
    }
    if output.len() < 3 {
        0.0
    } else {
        signed_area(&output).max(0.0)
    }
}

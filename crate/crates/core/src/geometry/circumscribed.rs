//! Polygons circumscribed about the unit circle.
//!
//! Among convex polygons with a prescribed cyclic sequence of interior
//! angles, the one whose edge lines are all tangent to a common circle has
//! the least perimeter for its area. With incircle radius 1 its perimeter
//! and area satisfy `P₀ = 2A₀ = 2 Σ cot(aᵢ/2)`, so at unit area the
//! perimeter is `2 √(Σ cot(aᵢ/2))`.

use std::f64::consts::PI;

use super::{ConvexPolygon, GeometryError, Point, DEGENERACY_CUTOFF};

/// Tolerance on `Σ aᵢ = (n − 2)π`.
pub const ANGLE_SUM_TOLERANCE: f64 = 1e-9;

/// Ordered interior angles (radians) of a convex n-gon.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleSpec {
    angles: Vec<f64>,
}

impl AngleSpec {
    /// Accepts angles in `(0, π]` summing to `(n − 2)π`.
    pub fn new(angles: Vec<f64>) -> Result<Self, GeometryError> {
        let n = angles.len();
        if n < 3 {
            return Err(GeometryError::TooFewAngles(n));
        }
        for (index, &value) in angles.iter().enumerate() {
            if !(value > 0.0 && value <= PI) {
                return Err(GeometryError::AngleOutOfRange { index, value });
            }
        }
        let expected = (n as f64 - 2.0) * PI;
        let actual: f64 = angles.iter().sum();
        if (actual - expected).abs() > ANGLE_SUM_TOLERANCE {
            return Err(GeometryError::AngleSumMismatch { expected, actual });
        }
        Ok(AngleSpec { angles })
    }

    pub fn from_degrees(degrees: &[f64]) -> Result<Self, GeometryError> {
        AngleSpec::new(degrees.iter().map(|d| d.to_radians()).collect())
    }

    /// All angles equal to `(n − 2)π / n`.
    pub fn regular(n: usize) -> Result<Self, GeometryError> {
        if n < 3 {
            return Err(GeometryError::TooFewAngles(n));
        }
        AngleSpec::new(vec![(n as f64 - 2.0) * PI / n as f64; n])
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn n(&self) -> usize {
        self.angles.len()
    }

    fn require_strictly_convex(&self) -> Result<(), GeometryError> {
        match self.angles.iter().position(|&a| a >= PI) {
            Some(index) => Err(GeometryError::AngleOutOfRange {
                index,
                value: self.angles[index],
            }),
            None => Ok(()),
        }
    }

    /// `cot(aᵢ/2)`: the tangent length from vertex `i` to either adjacent
    /// point of tangency on the unit incircle.
    pub fn tangent_lengths(&self) -> Vec<f64> {
        self.angles.iter().map(|a| 1.0 / (a / 2.0).tan()).collect()
    }

    /// Outward normal directions of the edge lines; edge 0 has normal angle 0.
    pub fn edge_normal_angles(&self) -> Vec<f64> {
        let mut phi = Vec::with_capacity(self.n());
        phi.push(0.0);
        for a in &self.angles[1..] {
            let last = *phi.last().unwrap();
            phi.push(last + (PI - a));
        }
        phi
    }
}

/// The polygon with interior angles `spec` circumscribed about the unit
/// circle centred at the origin.
///
/// Edge `i` joins vertex `i` to vertex `i + 1`. Edge 0 is the vertical line
/// `x = 1`, touching the circle at `(1, 0)`; vertex `i` sits at distance
/// `1 / sin(aᵢ/2)` from the origin.
pub fn circumscribed_polygon(spec: &AngleSpec) -> Result<ConvexPolygon, GeometryError> {
    spec.require_strictly_convex()?;
    let phi = spec.edge_normal_angles();
    let n = spec.n();
    let vertices = (0..n)
        .map(|i| {
            let prev = if i == 0 {
                phi[n - 1] - 2.0 * PI
            } else {
                phi[i - 1]
            };
            let bisector = 0.5 * (prev + phi[i]);
            Point::from_angle(bisector) * (1.0 / (spec.angles()[i] / 2.0).sin())
        })
        .collect();
    ConvexPolygon::new(vertices)
}

/// Scales `poly` about the origin to unit area.
pub fn scale_to_unit_area(poly: &ConvexPolygon) -> Result<ConvexPolygon, GeometryError> {
    let area = poly.area();
    if area <= DEGENERACY_CUTOFF {
        return Err(GeometryError::DegeneratePolygon(format!(
            "area {area:e} too small to normalise"
        )));
    }
    poly.scaled(1.0 / area.sqrt())
}

/// `2 √(Σ cot(aᵢ/2))`, the least perimeter of a unit-area polygon with
/// interior angles `spec`.
pub fn closed_form_perimeter(spec: &AngleSpec) -> Result<f64, GeometryError> {
    spec.require_strictly_convex()?;
    Ok(2.0 * spec.tangent_lengths().iter().sum::<f64>().sqrt())
}

/// Polygon cut out by the lines `x·n̂ᵢ = hᵢ`, `n̂ᵢ = (cos φᵢ, sin φᵢ)`, taken
/// in cyclic order. Vertex `i` is the meeting point of lines `i − 1` and `i`.
pub fn polygon_from_support(
    normal_angles: &[f64],
    offsets: &[f64],
) -> Result<ConvexPolygon, GeometryError> {
    let n = normal_angles.len();
    if n < 3 || offsets.len() != n {
        return Err(GeometryError::TooFewAngles(n.min(offsets.len())));
    }
    let vertices = (0..n)
        .map(|i| {
            let j = (i + n - 1) % n;
            let (n1, h1) = (Point::from_angle(normal_angles[j]), offsets[j]);
            let (n2, h2) = (Point::from_angle(normal_angles[i]), offsets[i]);
            let det = n1.cross(n2);
            Point::new((h1 * n2.y - h2 * n1.y) / det, (n1.x * h2 - n2.x * h1) / det)
        })
        .collect();
    ConvexPolygon::new(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn cairo_spec() -> AngleSpec {
        let l = 2.0 * FRAC_PI_3;
        AngleSpec::new(vec![l, l, FRAC_PI_2, l, FRAC_PI_2]).unwrap()
    }

    #[test]
    fn right_angles_give_two_by_two_square() {
        let spec = AngleSpec::new(vec![FRAC_PI_2; 4]).unwrap();
        let poly = circumscribed_polygon(&spec).unwrap();
        for v in poly.vertices() {
            assert!((v.x.abs() - 1.0).abs() < 1e-12 && (v.y.abs() - 1.0).abs() < 1e-12);
        }
        assert!((poly.perimeter() - 8.0).abs() < 1e-12);
        assert!((poly.area() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn cairo_angles_unscaled_perimeter_and_area() {
        // 2 Σ cot(aᵢ/2) = 2 (2 cot(π/4) + 3 cot(π/3)) = 2 (2 + √3)
        let poly = circumscribed_polygon(&cairo_spec()).unwrap();
        let s3 = 3f64.sqrt();
        assert!((poly.perimeter() - 2.0 * (2.0 + s3)).abs() < 1e-12);
        assert!((poly.area() - (2.0 + s3)).abs() < 1e-12);
    }

    #[test]
    fn regular_pentagon_edge_length() {
        let poly = circumscribed_polygon(&AngleSpec::regular(5).unwrap()).unwrap();
        let expected = 2.0 / (3.0 * PI / 10.0).tan();
        for l in poly.edge_lengths() {
            assert!((l - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn canonical_pose_puts_edge_zero_on_x_equals_one() {
        let poly = circumscribed_polygon(&cairo_spec()).unwrap();
        let (a, b) = poly.edge(0);
        assert!((a.x - 1.0).abs() < 1e-12 && (b.x - 1.0).abs() < 1e-12);
        assert!(a.y < 0.0 && b.y > 0.0);
    }

    #[test]
    fn vertex_distance_and_edge_lengths_follow_tangent_lengths() {
        let spec = AngleSpec::new(vec![1.0, 2.0, PI - 0.5, PI - 2.5]).unwrap();
        let poly = circumscribed_polygon(&spec).unwrap();
        let tl = spec.tangent_lengths();
        for (i, v) in poly.vertices().iter().enumerate() {
            assert!((v.norm() - 1.0 / (spec.angles()[i] / 2.0).sin()).abs() < 1e-12);
        }
        for (i, l) in poly.edge_lengths().iter().enumerate() {
            assert!((l - (tl[i] + tl[(i + 1) % 4])).abs() < 1e-12);
        }
        for (got, want) in poly.interior_angles().iter().zip(spec.angles()) {
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn spec_errors() {
        assert!(matches!(
            AngleSpec::new(vec![PI / 2.0, PI / 2.0]),
            Err(GeometryError::TooFewAngles(2))
        ));
        assert!(matches!(
            AngleSpec::new(vec![PI, 0.0, 0.0]),
            Err(GeometryError::AngleOutOfRange { index: 1, .. })
        ));
        assert!(matches!(
            AngleSpec::new(vec![1.0, 1.0, 1.0]),
            Err(GeometryError::AngleSumMismatch { .. })
        ));
    }

    #[test]
    fn straight_angle_is_accepted_by_spec_but_not_constructed() {
        let spec = AngleSpec::new(vec![PI, PI / 2.0, PI / 4.0, PI / 4.0]).unwrap();
        assert!(matches!(
            circumscribed_polygon(&spec),
            Err(GeometryError::AngleOutOfRange { index: 0, .. })
        ));
        assert!(closed_form_perimeter(&spec).is_err());
    }

    #[test]
    fn unit_area_scaling() {
        let square = circumscribed_polygon(&AngleSpec::regular(4).unwrap()).unwrap();
        let unit = scale_to_unit_area(&square).unwrap();
        assert!((unit.area() - 1.0).abs() < 1e-12);
        assert!((unit.perimeter() - 4.0).abs() < 1e-12);

        let again = scale_to_unit_area(&unit).unwrap();
        for (a, b) in again.vertices().iter().zip(unit.vertices()) {
            assert!(a.distance(*b) < 1e-12);
        }

        let cairo = scale_to_unit_area(&circumscribed_polygon(&cairo_spec()).unwrap()).unwrap();
        let expected = 2.0 * (2.0 + 3f64.sqrt()).sqrt();
        assert!((cairo.perimeter() - expected).abs() < 1e-12);
    }

    #[test]
    fn closed_form_values() {
        let p4 = closed_form_perimeter(&AngleSpec::regular(4).unwrap()).unwrap();
        assert!((p4 - 4.0).abs() < 1e-12);
        let p5 = closed_form_perimeter(&AngleSpec::regular(5).unwrap()).unwrap();
        assert!((p5 - 2.0 * (5.0 / (3.0 * PI / 10.0).tan()).sqrt()).abs() < 1e-12);
        // ≈ 3.81 for the regular pentagon
        assert!((p5 - 3.8119).abs() < 5e-5);
    }

    #[test]
    fn support_polygon_reproduces_circumscribed() {
        let spec = cairo_spec();
        let phi = spec.edge_normal_angles();
        let a = polygon_from_support(&phi, &[1.0; 5]).unwrap();
        let b = circumscribed_polygon(&spec).unwrap();
        for (p, q) in a.vertices().iter().zip(b.vertices()) {
            assert!(p.distance(*q) < 1e-12);
        }
    }
}

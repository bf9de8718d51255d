use serde::{Deserialize, Serialize};

use super::Point;

/// Rigid motion of the plane: optional reflection across the x-axis, then a
/// counterclockwise rotation, then a translation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Isometry {
    pub rotation: f64,
    pub translation: Point,
    pub reflection: bool,
}

impl Default for Isometry {
    fn default() -> Self {
        Isometry::IDENTITY
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        rotation: 0.0,
        translation: Point::ORIGIN,
        reflection: false,
    };

    pub fn translation(t: Point) -> Self {
        Isometry {
            translation: t,
            ..Isometry::IDENTITY
        }
    }

    pub fn rotation(angle: f64) -> Self {
        Isometry {
            rotation: angle,
            ..Isometry::IDENTITY
        }
    }

    /// Rotation by `angle` about `center`.
    pub fn rotation_about(center: Point, angle: f64) -> Self {
        Isometry {
            rotation: angle,
            translation: center - center.rotate(angle),
            reflection: false,
        }
    }

    /// Reflection across the x-axis.
    pub fn reflection_x() -> Self {
        Isometry {
            reflection: true,
            ..Isometry::IDENTITY
        }
    }

    /// The orientation-preserving motion taking `from` to `to` and the
    /// direction `from_dir` onto `to_dir`.
    pub fn align(from: Point, from_dir: Point, to: Point, to_dir: Point) -> Self {
        let rotation = to_dir.angle() - from_dir.angle();
        Isometry {
            rotation,
            translation: to - from.rotate(rotation),
            reflection: false,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        let p = if self.reflection {
            Point::new(p.x, -p.y)
        } else {
            p
        };
        p.rotate(self.rotation) + self.translation
    }

    /// Linear part only (for direction vectors).
    pub fn apply_vector(&self, v: Point) -> Point {
        let v = if self.reflection {
            Point::new(v.x, -v.y)
        } else {
            v
        };
        v.rotate(self.rotation)
    }

    /// `other` applied after `self`.
    pub fn then(&self, other: &Isometry) -> Isometry {
        // other(self(p)) = R_o F_o (R_s F_s p + t_s) + t_o
        // F R_s = R_{-s} F, so the composite rotation flips sign when `other` reflects.
        let rotation = if other.reflection {
            other.rotation - self.rotation
        } else {
            other.rotation + self.rotation
        };
        Isometry {
            rotation,
            translation: other.apply(self.translation),
            reflection: self.reflection != other.reflection,
        }
    }

    pub fn preserves_orientation(&self) -> bool {
        !self.reflection
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Point, b: Point) -> bool {
        a.distance(b) < 1e-12
    }

    #[test]
    fn composition_matches_sequential_application() {
        let a = Isometry {
            rotation: 0.7,
            translation: Point::new(1.0, -2.0),
            reflection: true,
        };
        let b = Isometry {
            rotation: -1.3,
            translation: Point::new(0.5, 0.25),
            reflection: false,
        };
        for p in [Point::new(0.3, 0.9), Point::new(-4.0, 2.0)] {
            assert!(close(a.then(&b).apply(p), b.apply(a.apply(p))));
            assert!(close(b.then(&a).apply(p), a.apply(b.apply(p))));
            assert!(close(a.then(&a).apply(p), a.apply(a.apply(p))));
        }
    }

    #[test]
    fn align_maps_anchor_and_direction() {
        let iso = Isometry::align(
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(-2.0, 3.0),
            Point::new(1.0, 0.0),
        );
        assert!(close(
            iso.apply(Point::new(1.0, 1.0)),
            Point::new(-2.0, 3.0)
        ));
        assert!(close(
            iso.apply_vector(Point::new(0.0, 2.0)),
            Point::new(2.0, 0.0)
        ));
    }

    #[test]
    fn rotation_about_fixes_center() {
        let c = Point::new(2.0, 5.0);
        assert!(close(Isometry::rotation_about(c, 1.1).apply(c), c));
    }
}

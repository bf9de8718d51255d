//! Randomised properties of the geometric core and the patch format.

use std::f64::consts::PI;

use pentile::geometry::{
    circumscribed_polygon, closed_form_perimeter, scale_to_unit_area, AngleSpec, Isometry, Point,
};
use pentile::io::{read_patch, write_patch};
use pentile::tiling::{fit_isometry, BoundaryEdges, TilingPatch};
use proptest::prelude::*;

/// Angles in (0, pi) summing to (n - 2) pi, drawn as a scaled simplex point.
fn angle_spec() -> impl Strategy<Value = AngleSpec> {
    (3usize..9).prop_flat_map(|n| {
        prop::collection::vec(0.05f64..1.0, n).prop_filter_map("angle out of range", move |w| {
            // exterior angles sum to 2 pi and each lies in (0, pi)
            let total: f64 = w.iter().sum();
            let angles: Vec<f64> = w.iter().map(|x| PI - 2.0 * PI * x / total).collect();
            if angles.iter().all(|&a| a > 0.01 && a < PI - 0.01) {
                AngleSpec::new(angles).ok()
            } else {
                None
            }
        })
    })
}

fn quad() -> Vec<Point> {
    vec![
        Point::new(0.0, 0.0),
        Point::new(1.3, 0.1),
        Point::new(1.0, 0.9),
        Point::new(0.2, 0.7),
    ]
}

proptest! {
    #[test]
    fn perimeter_matches_closed_form(spec in angle_spec()) {
        let unit = scale_to_unit_area(&circumscribed_polygon(&spec).unwrap()).unwrap();
        let closed = closed_form_perimeter(&spec).unwrap();
        prop_assert!((unit.perimeter() - closed).abs() < 1e-9 * closed.max(1.0));
        prop_assert!((unit.area() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fitted_isometry_is_recovered(
        angle in -PI..PI,
        tx in -50.0f64..50.0,
        ty in -50.0f64..50.0,
        reflect: bool,
    ) {
        let mut iso = Isometry::rotation(angle).then(&Isometry::translation(Point::new(tx, ty)));
        if reflect {
            iso = Isometry::reflection_x().then(&iso);
        }
        let model = quad();
        let mut target: Vec<Point> = model.iter().map(|&p| iso.apply(p)).collect();
        if reflect {
            // keep the loop counterclockwise
            target.reverse();
        }
        let (fit, residual) = fit_isometry(&model, &target).unwrap();
        prop_assert!(residual < 1e-9);
        prop_assert_eq!(fit.reflection, reflect);
        for &p in &model {
            prop_assert!(fit.apply(p).distance(iso.apply(p)) < 1e-9);
        }
    }

    #[test]
    fn patch_text_round_trips(
        coords in prop::collection::vec(prop::array::uniform2(-1e6f64..1e6), 3..8),
        r in 0.0f64..1e4,
    ) {
        let patch = TilingPatch::from_polygons(
            r,
            vec![coords.iter().map(|&[x, y]| Point::new(x, y)).collect()],
        );
        let back = read_patch(&write_patch(&patch)).unwrap();
        prop_assert_eq!(back, patch);
    }

    #[test]
    fn clipped_length_grows_with_radius(a in 0.0f64..6.0, b in 0.0f64..6.0) {
        let patch = pentile::tiling::generate_unchecked(&pentile::tiling::Pattern::Cairo, 6.0);
        let edges = BoundaryEdges::from_patch(&patch).unwrap();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(edges.length_inside(lo) <= edges.length_inside(hi) + 1e-12);
    }
}

//! Least-perimeter polygon for a list of angles (degrees), compared with the
//! closed form 2√(Σ cot(aᵢ/2)).
//!
//!     cargo run --example circumscribed_polygon -- 120 120 90 120 90

use pentile::geometry::{
    circumscribed_polygon, closed_form_perimeter, scale_to_unit_area, AngleSpec,
};

fn main() {
    let degrees: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("angles must be numbers"))
        .collect();
    let degrees = if degrees.is_empty() {
        vec![108.0; 5]
    } else {
        degrees
    };
    let spec = AngleSpec::from_degrees(&degrees).expect("angles must sum to (n - 2)·180");
    let poly = circumscribed_polygon(&spec).unwrap();
    println!("circumscribed about the unit circle: area {:.9}, perimeter {:.9}", poly.area(), poly.perimeter());
    let unit = scale_to_unit_area(&poly).unwrap();
    for (v, l) in unit.vertices().iter().zip(unit.edge_lengths()) {
        println!("  vertex ({:+.6}, {:+.6})  next edge {l:.6}", v.x, v.y);
    }
    println!("unit-area perimeter {:.12}", unit.perimeter());
    println!("closed form         {:.12}", closed_form_perimeter(&spec).unwrap());
}

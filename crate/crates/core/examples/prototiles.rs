//! The Cairo and Prismatic prototiles: both unit-area pentagons with
//! perimeter 2√(2 + √3).

use pentile::geometry::{make_prototile, optimal_pentagon_perimeter, PrototileKind};

fn main() {
    println!("2√(2 + √3) = {:.10}", optimal_pentagon_perimeter());
    for kind in PrototileKind::ALL {
        let t = make_prototile(kind);
        let angles: Vec<String> = t
            .shape
            .interior_angles()
            .iter()
            .map(|a| format!("{:.0}°", a.to_degrees()))
            .collect();
        println!(
            "{kind}: angles {}, area {:.12}, perimeter {:.10}",
            angles.join(" "),
            t.shape.area(),
            t.shape.perimeter()
        );
        let edges: Vec<String> = t.shape.edge_lengths().iter().map(|l| format!("{l:.4}")).collect();
        println!("  edges {}", edges.join(", "));
    }
}

//! Vertex/edge/face counts and degree statistics of each pattern.

use pentile::tiling::{build_graph, euler_audit, generate, Pattern};

fn main() {
    let radius: f64 = std::env::args().nth(1).map_or(20.0, |s| s.parse().unwrap());
    for name in ["cairo", "prismatic", "rows:CP", "rows:CPPP"] {
        let pattern: Pattern = name.parse().unwrap();
        let graph = build_graph(&generate(&pattern, radius).unwrap()).unwrap();
        let a = euler_audit(&graph).unwrap();
        println!(
            "{name}: V = {} E = {} F = {} V* = {} (V - E + F = {})",
            a.v, a.e_count, a.f, a.v_star, a.euler_characteristic
        );
        println!(
            "  interior: {} tiles, V - E + F = {}, e = {}, v_d = {:?}",
            a.interior.faces, a.interior.euler_characteristic, a.interior.e, a.interior.v_d
        );
        println!(
            "  sum v_d/d = {:.4}, (V - V*/2)/F = {:.4}, e/2 - 1 = {}, v3 = {} >= 3e - 12 = {}",
            a.interior.sum_v_d_over_d, a.vertex_face_ratio, a.target, a.v3, a.v3_bound
        );
        let degree4 = (0..graph.v())
            .filter(|&v| graph.complete[v] && graph.degree[v] == 4)
            .count();
        println!("  surrounded degree-4 vertices: {degree4}");
    }
}

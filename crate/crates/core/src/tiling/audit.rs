use serde::Serialize;

use super::graph::{InteriorStats, PatchGraph};
use super::TilingError;

/// Largest accepted `c` in a boundary correction `c/√F`.
pub const BOUNDARY_CONSTANT: f64 = 10.0;

/// Euler and vertex-degree bookkeeping of a patch graph.
///
/// Per-tile statistics are taken over interior tiles only. The vertex count
/// of the interior subgraph includes its boundary, so `(V − V*/2)/F` differs
/// from `e/2 − 1` by a boundary term of order `1/√F`; the constant `c` of each
/// such comparison is reported.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EulerAudit {
    pub v: usize,
    pub e_count: usize,
    pub f: usize,
    pub v_star: usize,
    /// `V − E + F` over the whole patch.
    pub euler_characteristic: i64,
    pub interior: InteriorStats,
    pub edge_to_edge: bool,
    /// `V = E − F + 1` on the interior subgraph; only asserted when edge to edge.
    pub euler_holds: bool,
    /// `e/2 − 1`
    pub target: f64,
    /// `|Σ v_d/d − (e/2 − 1)|·√F`
    pub c_degree_sum: f64,
    /// `(V − V*/2)/F` on the interior subgraph.
    pub vertex_face_ratio: f64,
    /// `|(V − V*/2)/F − (e/2 − 1)|·√F`
    pub c_vertex_ratio: f64,
    pub v3: f64,
    /// `3e − 12`
    pub v3_bound: f64,
    /// `max(0, 3e − 12 − v₃)·√F`
    pub c_v3: f64,
}

impl EulerAudit {
    pub fn passed(&self) -> bool {
        (!self.edge_to_edge || self.euler_holds)
            && self.c_degree_sum <= BOUNDARY_CONSTANT
            && self.c_vertex_ratio <= BOUNDARY_CONSTANT
            && self.c_v3 <= BOUNDARY_CONSTANT
    }
}

/// Audits the Euler identity and the degree inequalities on the interior
/// tiles of `graph`. Fails with `InsufficientInterior` if there are none.
pub fn euler_audit(graph: &PatchGraph) -> Result<EulerAudit, TilingError> {
    let s = graph.interior_stats();
    if s.faces == 0 {
        return Err(TilingError::InsufficientInterior);
    }
    let root_f = (s.faces as f64).sqrt();
    let target = s.e / 2.0 - 1.0;
    let ratio = (s.vertices as f64 - s.v_star as f64 / 2.0) / s.faces as f64;
    let v3 = s.v_d.get(&3).copied().unwrap_or(0.0);
    let v3_bound = 3.0 * s.e - 12.0;
    let edge_to_edge = graph.v_star() == 0;
    Ok(EulerAudit {
        v: graph.v(),
        e_count: graph.e(),
        f: graph.f(),
        v_star: graph.v_star(),
        euler_characteristic: graph.euler_characteristic(),
        edge_to_edge,
        euler_holds: s.euler_characteristic == 1,
        target,
        c_degree_sum: (s.sum_v_d_over_d - target).abs() * root_f,
        vertex_face_ratio: ratio,
        c_vertex_ratio: (ratio - target).abs() * root_f,
        v3,
        v3_bound,
        c_v3: (v3_bound - v3).max(0.0) * root_f,
        interior: s,
    })
}

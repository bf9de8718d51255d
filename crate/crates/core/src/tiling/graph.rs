use std::collections::{BTreeMap, HashMap};
use std::f64::consts::PI;

use serde::Serialize;

use super::index::GridIndex;
use super::patch::TilingPatch;
use super::TilingError;
use crate::geometry::Point;

/// Tile vertices closer than this are merged into one graph vertex.
pub const MERGE_TOLERANCE: f64 = 1e-7;

/// Slack on the `2π` angle sum that marks a vertex as surrounded.
pub const ANGLE_TOLERANCE: f64 = 1e-6;

/// A polygon corner sitting at a graph vertex.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Corner {
    pub tile: usize,
    /// Position of the corner in the tile's vertex loop.
    pub index: usize,
    pub angle: f64,
}

/// Merged vertex/edge/face structure of a patch.
///
/// Edges are the pieces of tile sides between consecutive graph vertices, so
/// a vertex lying inside another tile's side (a T-junction) splits that side.
#[derive(Clone, Debug, PartialEq)]
pub struct PatchGraph {
    pub vertices: Vec<Point>,
    /// Graph vertex of each tile corner, in loop order.
    pub tile_corners: Vec<Vec<usize>>,
    /// Vertex pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Tiles bordering each edge.
    pub edge_tiles: Vec<Vec<usize>>,
    pub corners: Vec<Vec<Corner>>,
    /// Tiles whose side passes through the vertex without a corner there.
    pub passing: Vec<Vec<usize>>,
    pub degree: Vec<usize>,
    /// Corner angles plus `π` per passing side add up to `2π`.
    pub complete: Vec<bool>,
    /// Tiles all of whose corners are complete vertices, so every neighbor is
    /// present in the patch.
    pub interior_tiles: Vec<usize>,
}

/// Face statistics over the interior tiles.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InteriorStats {
    pub faces: usize,
    pub vertices: usize,
    pub edges: usize,
    pub v_star: usize,
    /// `V − E + F` of the subgraph spanned by the interior tiles.
    pub euler_characteristic: i64,
    /// Mean number of polygon corners per tile.
    pub e: f64,
    /// Mean number of corners per tile at vertices of effective degree `d`.
    pub v_d: BTreeMap<usize, f64>,
    pub sum_v_d_over_d: f64,
}

impl PatchGraph {
    pub fn v(&self) -> usize {
        self.vertices.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn f(&self) -> usize {
        self.tile_corners.len()
    }

    /// Vertices lying inside some tile side.
    pub fn is_t_junction(&self, v: usize) -> bool {
        !self.passing[v].is_empty()
    }

    pub fn v_star(&self) -> usize {
        (0..self.v()).filter(|&v| self.is_t_junction(v)).count()
    }

    /// Degree used in the vertex statistics: a T-junction where `k − 1`
    /// sides end on a passing side counts as degree `2k`.
    pub fn effective_degree(&self, v: usize) -> usize {
        if self.is_t_junction(v) {
            2 * (self.degree[v] - 1)
        } else {
            self.degree[v]
        }
    }

    /// `V − E + F` of the whole patch.
    pub fn euler_characteristic(&self) -> i64 {
        self.v() as i64 - self.e() as i64 + self.f() as i64
    }

    /// Histogram of how many tiles border each edge.
    pub fn edge_multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for t in &self.edge_tiles {
            *h.entry(t.len()).or_insert(0) += 1;
        }
        h
    }

    /// Edges whose endpoints are both complete vertices.
    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.e()).filter(|&i| {
            let (a, b) = self.edges[i];
            self.complete[a] && self.complete[b]
        })
    }

    /// Statistics over [`PatchGraph::interior_tiles`].
    pub fn interior_stats(&self) -> InteriorStats {
        let inside: Vec<bool> = {
            let mut m = vec![false; self.f()];
            for &t in &self.interior_tiles {
                m[t] = true;
            }
            m
        };
        let mut verts = vec![false; self.v()];
        for &t in &self.interior_tiles {
            for &v in &self.tile_corners[t] {
                verts[v] = true;
            }
        }
        let edges: Vec<usize> = (0..self.e())
            .filter(|&i| self.edge_tiles[i].iter().any(|&t| inside[t]))
            .collect();
        // T-junction vertices are reached through edges, not corners
        for &i in &edges {
            verts[self.edges[i].0] = true;
            verts[self.edges[i].1] = true;
        }
        let vertices = verts.iter().filter(|&&b| b).count();
        let v_star = (0..self.v())
            .filter(|&v| verts[v] && self.is_t_junction(v))
            .count();

        let faces = self.interior_tiles.len();
        let mut corners = 0usize;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &t in &self.interior_tiles {
            for &v in &self.tile_corners[t] {
                corners += 1;
                *counts.entry(self.effective_degree(v)).or_insert(0) += 1;
            }
        }
        let per_face = |n: usize| if faces == 0 { 0.0 } else { n as f64 / faces as f64 };
        let v_d: BTreeMap<usize, f64> = counts.iter().map(|(&d, &n)| (d, per_face(n))).collect();
        let sum_v_d_over_d = v_d.iter().map(|(&d, &x)| x / d as f64).sum();
        InteriorStats {
            faces,
            vertices,
            edges: edges.len(),
            v_star,
            euler_characteristic: vertices as i64 - edges.len() as i64 + faces as i64,
            e: per_face(corners),
            v_d,
            sum_v_d_over_d,
        }
    }
}

fn interior_angle(prev: Point, p: Point, next: Point) -> f64 {
    let (u, w) = (next - p, prev - p);
    u.cross(w).atan2(u.dot(w))
}

struct Merger {
    cell: f64,
    grid: HashMap<(i64, i64), Vec<usize>>,
    points: Vec<Point>,
}

impl Merger {
    fn key(&self, p: Point) -> (i64, i64) {
        ((p.x / self.cell).floor() as i64, (p.y / self.cell).floor() as i64)
    }

    fn id(&mut self, p: Point) -> Result<usize, TilingError> {
        let (kx, ky) = self.key(p);
        let mut found: Vec<usize> = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.grid.get(&(kx + dx, ky + dy)) {
                    found.extend(
                        ids.iter()
                            .copied()
                            .filter(|&i| self.points[i].distance(p) <= MERGE_TOLERANCE),
                    );
                }
            }
        }
        match found.len() {
            0 => {
                let id = self.points.len();
                self.points.push(p);
                self.grid.entry((kx, ky)).or_default().push(id);
                Ok(id)
            }
            1 => Ok(found[0]),
            n => Err(TilingError::MergeAmbiguity {
                point: p,
                candidates: n,
            }),
        }
    }
}

/// Merges coincident corners, splits tile sides at T-junctions, and records
/// degrees, completeness and interior tiles.
pub fn build_graph(patch: &TilingPatch) -> Result<PatchGraph, TilingError> {
    let mut merger = Merger {
        cell: 10.0 * MERGE_TOLERANCE,
        grid: HashMap::new(),
        points: Vec::new(),
    };
    let mut tile_corners = Vec::with_capacity(patch.len());
    for t in &patch.tiles {
        let ids = t
            .vertices
            .iter()
            .map(|&p| merger.id(p))
            .collect::<Result<Vec<_>, _>>()?;
        tile_corners.push(ids);
    }
    let vertices = merger.points;
    let nv = vertices.len();

    let mut corners = vec![Vec::new(); nv];
    for (ti, (t, ids)) in patch.tiles.iter().zip(&tile_corners).enumerate() {
        let n = ids.len();
        for i in 0..n {
            let angle = interior_angle(t.vertices[(i + n - 1) % n], t.vertices[i], t.vertices[(i + 1) % n]);
            corners[ids[i]].push(Corner {
                tile: ti,
                index: i,
                angle,
            });
        }
    }

    let mut vindex = GridIndex::new(1.0);
    for (i, &p) in vertices.iter().enumerate() {
        vindex.insert_point(i, p);
    }

    let mut passing = vec![Vec::new(); nv];
    let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ti, ids) in tile_corners.iter().enumerate() {
        let n = ids.len();
        for i in 0..n {
            let (ia, ib) = (ids[i], ids[(i + 1) % n]);
            let (a, b) = (vertices[ia], vertices[ib]);
            let d = b - a;
            let len = d.norm();
            let pad = Point::new(MERGE_TOLERANCE, MERGE_TOLERANCE);
            let lo = Point::new(a.x.min(b.x), a.y.min(b.y)) - pad;
            let hi = Point::new(a.x.max(b.x), a.y.max(b.y)) + pad;
            let mut inner: Vec<(f64, usize)> = vindex
                .in_box(lo, hi)
                .into_iter()
                .filter(|&v| v != ia && v != ib)
                .filter_map(|v| {
                    let w = vertices[v] - a;
                    let s = w.dot(d) / (len * len);
                    let off = d.cross(w).abs() / len;
                    let margin = MERGE_TOLERANCE / len;
                    (off <= MERGE_TOLERANCE && s > margin && s < 1.0 - margin).then_some((s, v))
                })
                .collect();
            inner.sort_by(|x, y| x.0.total_cmp(&y.0));
            for &(_, v) in &inner {
                passing[v].push(ti);
            }
            let chain: Vec<usize> = std::iter::once(ia)
                .chain(inner.iter().map(|x| x.1))
                .chain(std::iter::once(ib))
                .collect();
            for w in chain.windows(2) {
                let key = (w[0].min(w[1]), w[0].max(w[1]));
                edge_map.entry(key).or_default().push(ti);
            }
        }
    }

    let edges: Vec<(usize, usize)> = edge_map.keys().copied().collect();
    let edge_tiles: Vec<Vec<usize>> = edge_map.into_values().collect();
    let mut degree = vec![0usize; nv];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let complete: Vec<bool> = (0..nv)
        .map(|v| {
            let sum: f64 =
                corners[v].iter().map(|c| c.angle).sum::<f64>() + PI * passing[v].len() as f64;
            (sum - 2.0 * PI).abs() <= ANGLE_TOLERANCE
        })
        .collect();
    let interior_tiles = (0..tile_corners.len())
        .filter(|&t| tile_corners[t].iter().all(|&v| complete[v]))
        .collect();

    Ok(PatchGraph {
        vertices,
        tile_corners,
        edges,
        edge_tiles,
        corners,
        passing,
        degree,
        complete,
        interior_tiles,
    })
}

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;

use super::mesh::Mesh;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScanOptions {
    /// Pairs closer than this are reported.
    pub radius: f64,
    /// Pairs joined by a path of at most this many face-adjacency steps are
    /// mesh neighbours and are skipped. `None` picks
    /// `max(2, ceil(radius / shortest edge) + 1)`.
    pub exclude_hops: Option<usize>,
}

impl ScanOptions {
    pub fn new(radius: f64) -> Self {
        ScanOptions {
            radius,
            exclude_hops: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Collision {
    pub a: usize,
    pub b: usize,
    pub distance: f64,
    pub params_a: Option<Vec<f64>>,
    pub params_b: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub radius: f64,
    pub exclude_hops: usize,
    pub vertex_count: usize,
    pub dim: usize,
    pub collision_count: usize,
    /// Largest `min(t, pi - t)` over both ends of every collision, when the
    /// mesh carries parameters with `t` last.
    pub max_boundary_distance: Option<f64>,
    pub collisions: Vec<Collision>,
}

impl ScanReport {
    pub fn is_empty(&self) -> bool {
        self.collisions.is_empty()
    }
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

fn adjacency(mesh: &Mesh) -> Vec<Vec<u32>> {
    let mut adj: Vec<HashSet<u32>> = vec![HashSet::new(); mesh.vertex_count()];
    for f in mesh.faces() {
        for &a in f {
            for &b in f {
                if a != b {
                    adj[a as usize].insert(b);
                }
            }
        }
    }
    adj.into_iter().map(|s| s.into_iter().collect()).collect()
}

fn within_hops(adj: &[Vec<u32>], start: usize, hops: usize) -> HashSet<u32> {
    let mut seen = HashSet::from([start as u32]);
    let mut frontier = vec![start as u32];
    for _ in 0..hops {
        let mut next = Vec::new();
        for v in frontier {
            for &w in &adj[v as usize] {
                if seen.insert(w) {
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Finds vertex pairs closer than `radius` that are not mesh neighbours.
///
/// Vertices are bucketed on a grid of cell size `radius` over their first
/// three coordinates, and candidate pairs are then compared in full dimension.
pub fn self_intersection_scan(mesh: &Mesh, options: ScanOptions) -> Result<ScanReport> {
    let radius = options.radius;
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::Domain(format!("scan radius must be positive, got {radius}")));
    }
    let dim = mesh.dim();
    let key = |p: &[f64]| -> [i64; 3] {
        let mut k = [0i64; 3];
        for (slot, x) in k.iter_mut().zip(p) {
            *slot = (x / radius).floor() as i64;
        }
        k
    };
    let mut cells: HashMap<[i64; 3], Vec<u32>> = HashMap::new();
    for i in 0..mesh.vertex_count() {
        cells.entry(key(mesh.point(i))).or_default().push(i as u32);
    }
    let adj = adjacency(mesh);
    let hops = options.exclude_hops.unwrap_or_else(|| {
        let shortest = mesh
            .edges()
            .iter()
            .map(|&(a, b)| distance(mesh.point(a as usize), mesh.point(b as usize)))
            .fold(f64::INFINITY, f64::min);
        if shortest > 0.0 && shortest.is_finite() {
            2.max((radius / shortest).ceil() as usize + 1)
        } else {
            2
        }
    });
    let offsets: Vec<[i64; 3]> = (0..27)
        .map(|c| [c % 3 - 1, c / 3 % 3 - 1, c / 9 - 1])
        .filter(|o| dim >= 3 || o[2] == 0)
        .filter(|o| dim >= 2 || o[1] == 0)
        .collect();

    let mut collisions: Vec<Collision> = (0..mesh.vertex_count())
        .into_par_iter()
        .flat_map_iter(|i| {
            let p = mesh.point(i);
            let k = key(p);
            let mut near: Vec<(usize, f64)> = Vec::new();
            for o in &offsets {
                let cell = [k[0] + o[0], k[1] + o[1], k[2] + o[2]];
                for &j in cells.get(&cell).into_iter().flatten() {
                    let j = j as usize;
                    if j <= i {
                        continue;
                    }
                    let d = distance(p, mesh.point(j));
                    if d < radius {
                        near.push((j, d));
                    }
                }
            }
            let local = if near.is_empty() {
                HashSet::new()
            } else {
                within_hops(&adj, i, hops)
            };
            near.into_iter()
                .filter(move |(j, _)| !local.contains(&(*j as u32)))
                .map(move |(j, d)| Collision {
                    a: i,
                    b: j,
                    distance: d,
                    params_a: mesh.param(i).map(<[f64]>::to_vec),
                    params_b: mesh.param(j).map(<[f64]>::to_vec),
                })
        })
        .collect();
    collisions.sort_by_key(|c| (c.a, c.b));

    let max_boundary_distance = collisions
        .iter()
        .flat_map(|c| [&c.params_a, &c.params_b])
        .map(|p| p.as_ref().and_then(|v| v.last()).map(|&t| t.min(PI - t)))
        .collect::<Option<Vec<f64>>>()
        .and_then(|v| v.into_iter().reduce(f64::max));

    Ok(ScanReport {
        radius,
        exclude_hops: hops,
        vertex_count: mesh.vertex_count(),
        dim,
        collision_count: collisions.len(),
        max_boundary_distance,
        collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_mesh, Resolution, Target};

    #[test]
    fn immersion_meets_itself_and_embedding_does_not() {
        let res = Resolution { theta: 200, t: 400 };
        let imm = build_mesh(2, Target::Immersion, res).unwrap();
        let report = self_intersection_scan(&imm, ScanOptions::new(1e-2)).unwrap();
        assert!(!report.is_empty());
        // each pair joins a sheet near t = 0 to one near t = pi
        for c in &report.collisions {
            let (ta, tb) = (c.params_a.as_ref().unwrap()[1], c.params_b.as_ref().unwrap()[1]);
            assert!((ta < PI / 2.0) != (tb < PI / 2.0));
        }
        let reach = report.max_boundary_distance.unwrap();
        assert!(reach > 0.5 && reach < 0.6, "reach {reach}");

        let emb = build_mesh(2, Target::Embedding, res).unwrap();
        let report = self_intersection_scan(&emb, ScanOptions::new(1e-2)).unwrap();
        assert!(report.is_empty(), "{} collisions", report.collision_count);
    }

    #[test]
    fn neighbours_are_excluded() {
        let m = build_mesh(2, Target::Embedding, Resolution { theta: 8, t: 9 }).unwrap();
        // radius above the grid spacing but below the gap between distant sheets
        let mut opts = ScanOptions::new(0.3);
        opts.exclude_hops = Some(8);
        assert!(self_intersection_scan(&m, opts).unwrap().is_empty());
        opts.exclude_hops = Some(0);
        assert!(!self_intersection_scan(&m, opts).unwrap().is_empty());
    }

    #[test]
    fn brute_force_agreement() {
        let m = build_mesh(2, Target::Immersion, Resolution { theta: 40, t: 80 }).unwrap();
        let opts = ScanOptions {
            radius: 0.05,
            exclude_hops: Some(2),
        };
        let report = self_intersection_scan(&m, opts).unwrap();
        let adj = adjacency(&m);
        let mut expect = Vec::new();
        for i in 0..m.vertex_count() {
            let local = within_hops(&adj, i, 2);
            for j in i + 1..m.vertex_count() {
                let d: f64 = m.point(i).iter().zip(m.point(j)).map(|(x, y)| (x - y).powi(2)).sum();
                if d.sqrt() < 0.05 && !local.contains(&(j as u32)) {
                    expect.push((i, j));
                }
            }
        }
        let got: Vec<(usize, usize)> = report.collisions.iter().map(|c| (c.a, c.b)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn bad_radius() {
        let m = build_mesh(2, Target::Immersion, Resolution { theta: 8, t: 9 }).unwrap();
        assert!(self_intersection_scan(&m, ScanOptions::new(0.0)).is_err());
        assert!(self_intersection_scan(&m, ScanOptions::new(f64::NAN)).is_err());
    }
}

use std::collections::HashSet;
use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::immersion::{immersion_into, ImmersionParams};
use super::WELD_TOLERANCE;
use crate::error::{Error, Result};

/// Upper bound on sampled vertices for one mesh.
pub const MAX_VERTICES: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    /// `K_n` in `R^{n+1}`.
    Immersion,
    /// `K_n` in `R^{n+2}`.
    Embedding,
}

impl Target {
    pub fn ambient_dim(self, n: usize) -> usize {
        match self {
            Target::Immersion => n + 1,
            Target::Embedding => n + 2,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Immersion => "immersion",
            Target::Embedding => "embedding",
        })
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "immersion" => Ok(Target::Immersion),
            "embedding" => Ok(Target::Embedding),
            _ => Err(Error::Parse(format!("unknown target {s:?}"))),
        }
    }
}

/// Grid sizes: `theta` samples per angle over `[0, 2pi)`, `t` samples over `[0, pi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub theta: usize,
    pub t: usize,
}

impl FromStr for Resolution {
    type Err = Error;

    /// `"200x400"` is 200 angle samples by 400 samples in `t`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("resolution must look like 200x400, got {s:?}"));
        let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
        Ok(Resolution {
            theta: a.trim().parse().map_err(|_| bad())?,
            t: b.trim().parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.theta, self.t)
    }
}

/// Sampled points with quad faces. Meshes built here also carry their grid
/// parameters `(theta_1, .., theta_{n-1}, t)`; meshes read from files may not.
#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub n: Option<usize>,
    pub target: Option<Target>,
    pub resolution: Option<Resolution>,
    dim: usize,
    points: Vec<f64>,
    param_dim: usize,
    params: Option<Vec<f64>>,
    /// Quads; a triangle repeats its last corner.
    faces: Vec<[u32; 4]>,
    /// Largest distance between a `t = pi` sample and the vertex it was merged into.
    pub weld_residual: Option<f64>,
}

impl Mesh {
    pub fn from_parts(
        dim: usize,
        points: Vec<f64>,
        params: Option<(usize, Vec<f64>)>,
        faces: Vec<[u32; 4]>,
    ) -> Result<Self> {
        if dim == 0 || !points.len().is_multiple_of(dim) {
            return Err(Error::Domain("point buffer does not match the dimension".into()));
        }
        let count = points.len() / dim;
        let (param_dim, params) = match params {
            Some((k, p)) if k > 0 && p.len() == k * count => (k, Some(p)),
            Some(_) => return Err(Error::Domain("parameter buffer does not match vertex count".into())),
            None => (0, None),
        };
        let mesh = Mesh {
            n: None,
            target: None,
            resolution: None,
            dim,
            points,
            param_dim,
            params,
            faces,
            weld_residual: None,
        };
        mesh.validate()?;
        Ok(mesh)
    }

    pub fn validate(&self) -> Result<()> {
        let count = self.vertex_count();
        match self.faces.iter().flatten().find(|&&i| i as usize >= count) {
            Some(i) => Err(Error::Invariant(format!(
                "face index {i} out of range for {count} vertices"
            ))),
            None => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len() / self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn param_dim(&self) -> usize {
        self.param_dim
    }

    pub fn param(&self, i: usize) -> Option<&[f64]> {
        let k = self.param_dim;
        self.params.as_ref().map(|p| &p[i * k..(i + 1) * k])
    }

    pub fn faces(&self) -> &[[u32; 4]] {
        &self.faces
    }

    /// Distinct undirected edges of the faces.
    pub fn edges(&self) -> HashSet<(u32, u32)> {
        let mut edges = HashSet::new();
        for f in &self.faces {
            for k in 0..4 {
                let (a, b) = (f[k], f[(k + 1) % 4]);
                if a != b {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        edges
    }

    /// `V - E + F` of the complex spanned by the faces.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edges().len() as i64 + self.faces.len() as i64
    }
}

/// Index in `0..res` of the angle `pi - theta_1` when `theta_1 = 2 pi a / res`.
pub fn weld_angle_index(res: usize, a: usize) -> usize {
    (res / 2 + res - a) % res
}

struct Grid {
    n: usize,
    res: usize,
    /// Number of `t` rows kept; the row at `t = pi` is merged into row 0.
    rows: usize,
    layer: usize,
}

impl Grid {
    fn angles(&self, lin: usize) -> Vec<usize> {
        let mut rem = lin;
        (0..self.n - 1)
            .map(|_| {
                let a = rem % self.res;
                rem /= self.res;
                a
            })
            .collect()
    }

    fn linear(&self, a: &[usize]) -> usize {
        a.iter().rev().fold(0, |acc, &x| acc * self.res + x)
    }

    /// Vertex id for angle indices `a` in row `j <= rows`.
    fn id(&self, a: &[usize], j: usize) -> u32 {
        if j == self.rows {
            let mut w = a.to_vec();
            w[0] = weld_angle_index(self.res, a[0]);
            self.linear(&w) as u32
        } else {
            (j * self.layer + self.linear(a)) as u32
        }
    }

    fn step(&self, a: &mut [usize], j: &mut usize, dir: usize) {
        if dir < self.n - 1 {
            a[dir] = (a[dir] + 1) % self.res;
        } else {
            *j += 1;
        }
    }

    fn theta(&self, a: &[usize]) -> Vec<f64> {
        a.iter().map(|&k| TAU * k as f64 / self.res as f64).collect()
    }

    fn t(&self, j: usize) -> f64 {
        PI * j as f64 / self.rows as f64
    }
}

/// Samples `K_n` on a uniform grid and merges the `t = pi` row into the
/// `t = 0` row through `theta_1 -> pi - theta_1`, where the two boundary
/// slices coincide pointwise. For `n > 2` the faces form the 2-skeleton of
/// the cubical grid.
pub fn build_mesh(n: usize, target: Target, res: Resolution) -> Result<Mesh> {
    let p = ImmersionParams::new(n)?;
    if res.theta < 4 || !res.theta.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "angle resolution must be even and at least 4, got {}",
            res.theta
        )));
    }
    if res.t < 3 {
        return Err(Error::Domain(format!("t resolution must be at least 3, got {}", res.t)));
    }
    let layer_u = (res.theta as u64)
        .checked_pow(n as u32 - 1)
        .filter(|l| l.saturating_mul(res.t as u64 - 1) <= MAX_VERTICES)
        .ok_or_else(|| Error::Infeasible {
            what: format!("mesh of K_{n} at {res}"),
            count: (res.theta as u128).saturating_pow(n as u32 - 1) * (res.t as u128 - 1),
            limit: MAX_VERTICES as u128,
        })?;
    let grid = Grid {
        n,
        res: res.theta,
        rows: res.t - 1,
        layer: layer_u as usize,
    };
    let dim = target.ambient_dim(n);
    let count = grid.layer * grid.rows;

    let mut points = vec![0.0; count * dim];
    let mut params = vec![0.0; count * n];
    points
        .par_chunks_mut(dim)
        .zip(params.par_chunks_mut(n))
        .enumerate()
        .try_for_each(|(id, (pt, par))| -> Result<()> {
            let (j, lin) = (id / grid.layer, id % grid.layer);
            let theta = grid.theta(&grid.angles(lin));
            let t = grid.t(j);
            immersion_into(&p, &theta, t, &mut pt[..n + 1])?;
            if target == Target::Embedding {
                pt[n + 1] = (2.0 * t).sin();
            }
            par[..n - 1].copy_from_slice(&theta);
            par[n - 1] = t;
            Ok(())
        })?;

    let residual = (0..grid.layer)
        .into_par_iter()
        .map(|lin| -> Result<f64> {
            let a = grid.angles(lin);
            let mut top = vec![0.0; dim];
            immersion_into(&p, &grid.theta(&a), PI, &mut top[..n + 1])?;
            // sin(2 pi) is zero up to rounding
            if target == Target::Embedding {
                top[n + 1] = (2.0 * PI).sin();
            }
            let id = grid.id(&a, grid.rows) as usize;
            let merged = &points[id * dim..(id + 1) * dim];
            Ok(top
                .iter()
                .zip(merged)
                .map(|(x, y)| (x - y).powi(2))
                .sum::<f64>()
                .sqrt())
        })
        .try_reduce(|| 0.0, |a, b| Ok(a.max(b)))?;
    if residual > WELD_TOLERANCE {
        return Err(Error::Invariant(format!(
            "boundary slices differ by {residual:e} after merging"
        )));
    }

    let mut faces = Vec::with_capacity(count * n * (n - 1) / 2);
    for id in 0..count {
        let (j, lin) = (id / grid.layer, id % grid.layer);
        let a = grid.angles(lin);
        for d1 in 0..n {
            for d2 in d1 + 1..n {
                let mut corners = [0u32; 4];
                let (mut b, mut k) = (a.clone(), j);
                corners[0] = grid.id(&b, k);
                grid.step(&mut b, &mut k, d1);
                corners[1] = grid.id(&b, k);
                grid.step(&mut b, &mut k, d2);
                corners[2] = grid.id(&b, k);
                let (mut b, mut k) = (a.clone(), j);
                grid.step(&mut b, &mut k, d2);
                corners[3] = grid.id(&b, k);
                faces.push(corners);
            }
        }
    }

    let mut mesh = Mesh::from_parts(dim, points, Some((n, params)), faces)?;
    mesh.n = Some(n);
    mesh.target = Some(target);
    mesh.resolution = Some(res);
    mesh.weld_residual = Some(residual);
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_bottle_counts() {
        let res = Resolution { theta: 16, t: 21 };
        for target in [Target::Immersion, Target::Embedding] {
            let m = build_mesh(2, target, res).unwrap();
            assert_eq!(m.vertex_count(), 16 * 21 - 16);
            assert_eq!(m.faces().len(), 16 * 20);
            assert_eq!(m.euler_characteristic(), 0);
            assert_eq!(m.dim(), target.ambient_dim(2));
            assert!(m.weld_residual.unwrap() < WELD_TOLERANCE);
        }
    }

    #[test]
    fn every_edge_has_two_faces() {
        let m = build_mesh(2, Target::Immersion, Resolution { theta: 8, t: 9 }).unwrap();
        let mut uses = std::collections::HashMap::new();
        for f in m.faces() {
            for k in 0..4 {
                let (a, b) = (f[k], f[(k + 1) % 4]);
                *uses.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        assert!(uses.values().all(|&c| c == 2));
    }

    #[test]
    fn higher_dimensional_counts() {
        let res = Resolution { theta: 6, t: 5 };
        let m = build_mesh(3, Target::Embedding, res).unwrap();
        assert_eq!(m.vertex_count(), 36 * 5 - 36);
        assert_eq!(m.faces().len(), 3 * 36 * 4);
        // with one cube per vertex, V - E + F - C = 0
        assert_eq!(m.edges().len(), 3 * 36 * 4);
        assert_eq!(m.euler_characteristic(), m.vertex_count() as i64);
        assert_eq!(m.param_dim(), 3);
        m.validate().unwrap();
    }

    #[test]
    fn rejects_bad_resolution() {
        assert!(build_mesh(2, Target::Immersion, Resolution { theta: 7, t: 10 }).is_err());
        assert!(build_mesh(2, Target::Immersion, Resolution { theta: 2, t: 10 }).is_err());
        assert!(build_mesh(2, Target::Immersion, Resolution { theta: 8, t: 2 }).is_err());
        assert!(matches!(
            build_mesh(8, Target::Immersion, Resolution { theta: 100, t: 10 }),
            Err(Error::Infeasible { .. })
        ));
        assert_eq!("200x400".parse::<Resolution>().unwrap(), Resolution { theta: 200, t: 400 });
        assert!("200".parse::<Resolution>().is_err());
    }

    #[test]
    fn weld_index_is_an_involution() {
        for res in [4, 6, 200] {
            for a in 0..res {
                assert_eq!(weld_angle_index(res, weld_angle_index(res, a)), a);
            }
        }
    }
}

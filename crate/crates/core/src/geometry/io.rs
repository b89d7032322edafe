//! Mesh files.
//!
//! Three-dimensional meshes are written as Wavefront OBJ. For a Klein bottle
//! sampled on a grid the `vt` lines hold `(theta / 2pi, t / pi)`.
//!
//! Higher-dimensional meshes use the plain-text `.kmesh` format:
//!
//! ```text
//! # klein-forge mesh v1
//! n 3                  (optional)
//! target embedding     (optional)
//! res 6x5              (optional)
//! dim 5
//! params 3             (0 when absent)
//! v x_1 .. x_dim       (one line per vertex)
//! p u_1 .. u_params    (one line per vertex, in vertex order, when params > 0)
//! f a b c d            (1-based vertex indices; triangles have three)
//! ```

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::mesh::{Mesh, Resolution};
use crate::error::{Error, Result};

pub const KMESH_HEADER: &str = "# klein-forge mesh v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Kmesh,
}

impl MeshFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("obj") => Ok(MeshFormat::Obj),
            Some(e) if e.eq_ignore_ascii_case("kmesh") => Ok(MeshFormat::Kmesh),
            _ => Err(Error::Domain(format!(
                "cannot tell the mesh format of {}; use .obj or .kmesh",
                path.display()
            ))),
        }
    }
}

fn metadata_line(mesh: &Mesh) -> Option<String> {
    let mut parts = Vec::new();
    if let Some(n) = mesh.n {
        parts.push(format!("n={n}"));
    }
    if let Some(t) = mesh.target {
        parts.push(format!("target={t}"));
    }
    if let Some(r) = mesh.resolution {
        parts.push(format!("res={r}"));
    }
    (!parts.is_empty()).then(|| format!("# klein-forge {}", parts.join(" ")))
}

fn write_faces<W: Write>(mesh: &Mesh, out: &mut W, with_vt: bool) -> Result<()> {
    for f in mesh.faces() {
        let corners: &[u32] = if f[3] == f[2] { &f[..3] } else { &f[..] };
        write!(out, "f")?;
        for &c in corners {
            if with_vt {
                write!(out, " {0}/{0}", c + 1)?;
            } else {
                write!(out, " {}", c + 1)?;
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Writes OBJ. Meshes of dimension above 3 need `projection`, three
/// zero-based coordinate indices; the result is a lossy view.
pub fn write_obj<W: Write>(mesh: &Mesh, out: &mut W, projection: Option<[usize; 3]>) -> Result<()> {
    let dim = mesh.dim();
    let coords = match projection {
        Some(p) if p.iter().all(|&c| c < dim) => p,
        Some(p) => {
            return Err(Error::Domain(format!(
                "projection {p:?} out of range for dimension {dim}"
            )))
        }
        None if dim == 3 => [0, 1, 2],
        None => {
            return Err(Error::Domain(format!(
                "OBJ holds 3 coordinates but the mesh has {dim}; use .kmesh or a projection"
            )))
        }
    };
    if let Some(line) = metadata_line(mesh) {
        writeln!(out, "{line}")?;
    }
    if projection.is_some() && dim != 3 {
        writeln!(
            out,
            "# lossy projection onto coordinates {} {} {}",
            coords[0] + 1,
            coords[1] + 1,
            coords[2] + 1
        )?;
    }
    for i in 0..mesh.vertex_count() {
        let p = mesh.point(i);
        writeln!(out, "v {} {} {}", p[coords[0]], p[coords[1]], p[coords[2]])?;
    }
    let with_vt = mesh.param_dim() == 2;
    if with_vt {
        for i in 0..mesh.vertex_count() {
            let q = mesh.param(i).expect("params present");
            writeln!(
                out,
                "vt {} {}",
                q[0] / std::f64::consts::TAU,
                q[1] / std::f64::consts::PI
            )?;
        }
    }
    write_faces(mesh, out, with_vt)
}

pub fn write_kmesh<W: Write>(mesh: &Mesh, out: &mut W) -> Result<()> {
    writeln!(out, "{KMESH_HEADER}")?;
    if let Some(n) = mesh.n {
        writeln!(out, "n {n}")?;
    }
    if let Some(t) = mesh.target {
        writeln!(out, "target {t}")?;
    }
    if let Some(r) = mesh.resolution {
        writeln!(out, "res {r}")?;
    }
    writeln!(out, "dim {}", mesh.dim())?;
    writeln!(out, "params {}", mesh.param_dim())?;
    let join = |xs: &[f64]| xs.iter().map(f64::to_string).collect::<Vec<_>>().join(" ");
    for i in 0..mesh.vertex_count() {
        writeln!(out, "v {}", join(mesh.point(i)))?;
    }
    for i in 0..mesh.vertex_count() {
        if let Some(q) = mesh.param(i) {
            writeln!(out, "p {}", join(q))?;
        }
    }
    write_faces(mesh, out, false)
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn floats(line: usize, fields: &[&str]) -> Result<Vec<f64>> {
    fields
        .iter()
        .map(|f| f.parse::<f64>().map_err(|_| parse_err(line, format!("bad number {f:?}"))))
        .collect()
}

/// Resolves one OBJ index (1-based, or negative from the end).
fn obj_index(line: usize, token: &str, count: usize) -> Result<u32> {
    let k: i64 = token
        .parse()
        .map_err(|_| parse_err(line, format!("bad index {token:?}")))?;
    let idx = match k {
        k if k > 0 => k - 1,
        k if k < 0 => count as i64 + k,
        _ => return Err(parse_err(line, "index 0")),
    };
    if idx < 0 || idx >= count as i64 {
        return Err(parse_err(line, format!("index {k} out of range")));
    }
    Ok(idx as u32)
}

fn make_face(line: usize, corners: Vec<u32>) -> Result<[u32; 4]> {
    match corners[..] {
        [a, b, c] => Ok([a, b, c, c]),
        [a, b, c, d] => Ok([a, b, c, d]),
        _ => Err(parse_err(line, "only triangles and quads are supported")),
    }
}

fn apply_metadata(mesh: &mut Mesh, key: &str, value: &str) {
    match key {
        "n" => mesh.n = value.parse().ok(),
        "target" => mesh.target = value.parse().ok(),
        "res" => mesh.resolution = value.parse::<Resolution>().ok(),
        _ => {}
    }
}

pub fn read_obj<R: BufRead>(input: R) -> Result<Mesh> {
    let mut points = Vec::new();
    let mut uvs: Vec<f64> = Vec::new();
    let mut faces = Vec::new();
    let mut vt_matches = true;
    let mut meta = Vec::new();
    for (ln, line) in input.lines().enumerate() {
        let line = line?;
        let ln = ln + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first().copied() {
            Some("v") if fields.len() >= 4 => points.extend(floats(ln, &fields[1..4])?),
            Some("v") => return Err(parse_err(ln, "vertex needs three coordinates")),
            Some("vt") if fields.len() >= 3 => uvs.extend(floats(ln, &fields[1..3])?),
            Some("vt") => return Err(parse_err(ln, "texture coordinate needs two values")),
            Some("f") => {
                let count = points.len() / 3;
                let mut corners = Vec::new();
                for tok in &fields[1..] {
                    let mut parts = tok.split('/');
                    let v = obj_index(ln, parts.next().unwrap_or(""), count)?;
                    match parts.next() {
                        Some(t) if !t.is_empty() => {
                            vt_matches &= obj_index(ln, t, uvs.len() / 2)? == v;
                        }
                        _ => vt_matches = false,
                    }
                    corners.push(v);
                }
                faces.push(make_face(ln, corners)?);
            }
            Some("#") if fields.get(1) == Some(&"klein-forge") => {
                meta.extend(fields[2..].iter().filter_map(|f| {
                    f.split_once('=').map(|(k, v)| (k.to_string(), v.to_string()))
                }));
            }
            _ => {}
        }
    }
    let count = points.len() / 3;
    let params = (vt_matches && !faces.is_empty() && uvs.len() == 2 * count).then(|| {
        let p = uvs
            .chunks(2)
            .flat_map(|c| [c[0] * std::f64::consts::TAU, c[1] * std::f64::consts::PI])
            .collect();
        (2, p)
    });
    let mut mesh = Mesh::from_parts(3, points, params, faces)?;
    for (k, v) in meta {
        apply_metadata(&mut mesh, &k, &v);
    }
    Ok(mesh)
}

pub fn read_kmesh<R: BufRead>(input: R) -> Result<Mesh> {
    let mut lines = input.lines();
    match lines.next() {
        Some(Ok(first)) if first.trim() == KMESH_HEADER => {}
        _ => return Err(Error::Parse(format!("missing header {KMESH_HEADER:?}"))),
    }
    let (mut dim, mut param_dim) = (None, 0usize);
    let mut meta = Vec::new();
    let (mut points, mut params, mut faces) = (Vec::new(), Vec::new(), Vec::new());
    for (ln, line) in lines.enumerate() {
        let line = line?;
        let ln = ln + 2;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(&tag) = fields.first() else { continue };
        match tag {
            "dim" | "params" => {
                let value: usize = fields
                    .get(1)
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| parse_err(ln, format!("bad {tag} line")))?;
                if tag == "dim" {
                    dim = Some(value);
                } else {
                    param_dim = value;
                }
            }
            "n" | "target" | "res" => {
                meta.push((tag.to_string(), fields.get(1).unwrap_or(&"").to_string()))
            }
            "v" | "p" => {
                let want = if tag == "v" {
                    dim.ok_or_else(|| parse_err(ln, "vertex before dim"))?
                } else {
                    param_dim
                };
                if fields.len() != want + 1 {
                    return Err(parse_err(ln, format!("expected {want} values")));
                }
                let buf = if tag == "v" { &mut points } else { &mut params };
                buf.extend(floats(ln, &fields[1..])?);
            }
            "f" => {
                let count = points.len() / dim.unwrap_or(1).max(1);
                let corners = fields[1..]
                    .iter()
                    .map(|t| obj_index(ln, t, count))
                    .collect::<Result<Vec<_>>>()?;
                faces.push(make_face(ln, corners)?);
            }
            t if t.starts_with('#') => {}
            _ => return Err(parse_err(ln, format!("unknown record {tag:?}"))),
        }
    }
    let dim = dim.ok_or_else(|| Error::Parse("missing dim line".into()))?;
    let params = (param_dim > 0).then_some((param_dim, params));
    let mut mesh = Mesh::from_parts(dim, points, params, faces)?;
    for (k, v) in meta {
        apply_metadata(&mut mesh, &k, &v);
    }
    Ok(mesh)
}

/// Reads a mesh file, choosing the format from the extension.
pub fn read_mesh(path: &Path) -> Result<Mesh> {
    let format = MeshFormat::from_path(path)?;
    let input = BufReader::new(File::open(path)?);
    match format {
        MeshFormat::Obj => read_obj(input),
        MeshFormat::Kmesh => read_kmesh(input),
    }
}

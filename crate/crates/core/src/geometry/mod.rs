//! Explicit geometry of `K_n`: nested torus embeddings, the immersion in
//! `R^{n+1}`, the embedding in `R^{n+2}`, sampled meshes, file export and a
//! proximity scan for self-intersections.

mod immersion;
mod io;
mod mesh;
mod scan;
mod torus;

pub use immersion::{
    directrix, embedding_point, immersion_point, radius, Directrix, ImmersionParams,
};
pub use io::{read_kmesh, read_mesh, read_obj, write_kmesh, write_obj, MeshFormat};
pub use mesh::{build_mesh, weld_angle_index, Mesh, Resolution, Target};
pub use scan::{self_intersection_scan, Collision, ScanOptions, ScanReport};
pub use torus::{torus_point, TorusParams};

/// Absolute tolerance for identities that hold exactly in real arithmetic.
pub const WELD_TOLERANCE: f64 = 1e-9;

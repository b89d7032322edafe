//! Exact computations on the n-dimensional Klein bottles
//! `K_n = (S^1)^n / (z_1, .., z_{n-1}, z_n) ~ (conj z_1, .., conj z_{n-1}, -z_n)`.
//!
//! The crate covers
//!
//! * the mod-2 cohomology ring `Z2[R, V_1..V_{n-1}] / (R^2, V_i^2 + R V_i)` with
//!   cup products, Steenrod squares and the Poincare duality pairing ([`cohomology`]),
//! * Wu and Stiefel-Whitney classes of the tangent bundle ([`char_classes`]),
//! * integral cohomology, the stable splitting of the suspension and the
//!   cross checks tying them together ([`integral`]),
//! * normal forms in the fundamental group ([`pi1`]),
//! * zero-divisor products in `H^*(K_n x K_n; Z2)` and topological complexity
//!   bounds ([`tensor`]),
//! * the explicit torus embeddings, the immersion in `R^{n+1}` and the embedding
//!   in `R^{n+2}`, with meshing and a self-intersection scan ([`geometry`]),
//! * genetic codes of planar polygon spaces ([`polygon`]),
//! * an umbrella verification run over all of the above ([`verify`]).

pub mod binom;
pub mod char_classes;
pub mod cohomology;
pub mod error;
pub mod f2;
pub mod geometry;
pub mod integral;
pub mod pi1;
pub mod polygon;
pub mod smith;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};

use serde::Serialize;

use crate::error::{Error, Result};

/// Radii `r_1..r_{n-1}` of a torus `T^{n-1}` embedded in `R^n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusParams {
    radii: Vec<f64>,
}

impl TorusParams {
    /// Requires `r_i > r_{i+1} + .. + r_{n-1}` for every `i`, all positive.
    pub fn new(radii: Vec<f64>) -> Result<Self> {
        if radii.is_empty() {
            return Err(Error::Domain("a torus needs at least one radius".into()));
        }
        if radii.iter().any(|r| !r.is_finite() || *r <= 0.0) {
            return Err(Error::Domain("radii must be positive and finite".into()));
        }
        let mut tail = 0.0;
        for (i, r) in radii.iter().enumerate().rev() {
            if *r <= tail {
                return Err(Error::Domain(format!(
                    "radius r_{} = {r} does not exceed the sum {tail} of later radii",
                    i + 1
                )));
            }
            tail += r;
        }
        Ok(TorusParams { radii })
    }

    /// `r_i = 2^{n-1-i}`.
    pub fn standard(n: usize) -> Result<Self> {
        if !(2..=60).contains(&n) {
            return Err(Error::Domain(format!("torus dimension n = {n} outside 2..=60")));
        }
        Self::new((1..n).map(|i| (1u64 << (n - 1 - i)) as f64).collect())
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.radii.len() + 1
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    /// Largest first coordinate over the torus, attained at all angles zero.
    pub fn max_x(&self) -> f64 {
        self.radii.iter().sum()
    }
}

/// Writes the torus point for `radii` (length `n-1`) and `theta` (length
/// `n-1`) into `out` (length `n`). No validation.
pub(crate) fn torus_coords(radii: &[f64], theta: &[f64], out: &mut [f64]) {
    let n = radii.len() + 1;
    // w holds w_{i+1} while coordinate i (1-based) is filled in
    let mut w = radii[n - 2];
    out[n - 1] = w * theta[n - 2].sin();
    for i in (2..n).rev() {
        w = radii[i - 2] + w * theta[i - 1].cos();
        out[i - 1] = w * theta[i - 2].sin();
    }
    out[0] = w * theta[0].cos();
}

pub fn torus_point(p: &TorusParams, theta: &[f64]) -> Result<Vec<f64>> {
    if theta.len() != p.radii.len() {
        return Err(Error::DimensionMismatch {
            left: theta.len(),
            right: p.radii.len(),
        });
    }
    let mut out = vec![0.0; p.n()];
    torus_coords(&p.radii, theta, &mut out);
    Ok(out)
}

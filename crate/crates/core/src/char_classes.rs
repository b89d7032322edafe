//! Wu classes and Stiefel-Whitney classes of the tangent bundle of `K_n`,
//! and a summary of the manifold invariants that follow from them.
//!
//! The Wu class `v_j` is the unique degree-`j` class with `v_j x = Sq^j x` for
//! every `x` of degree `n - j`. It is found by solving the linear system given
//! by the duality pairing, then `w = Sq(v)` yields the Stiefel-Whitney classes.

use serde::Serialize;

use crate::cohomology::{basis, check_n, cup_length, duality_pairing, CohomologyClass};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WuData {
    pub n: usize,
    pub wu: Vec<CohomologyClass>,
    pub sw: Vec<CohomologyClass>,
}

/// Solves for `v_j` in degree `j`, `j = 0..=n`.
pub fn wu_classes(n: usize) -> Result<Vec<CohomologyClass>> {
    check_n(n)?;
    (0..=n).map(|j| wu_class(n, j)).collect()
}

fn wu_class(n: usize, j: usize) -> Result<CohomologyClass> {
    let left = basis(n, j)?;
    let right = basis(n, n - j)?;
    let pairing = duality_pairing(n, j)?;
    // v = sum_a c_a left[a] must satisfy <v, right[b]> = <Sq^j right[b]> for all b,
    // i.e. pairing^T c = s
    let rhs = right
        .iter()
        .map(|x| Ok(CohomologyClass::from(*x).sq(j)?.top_coefficient()))
        .collect::<Result<Vec<bool>>>()?;
    let coeffs = pairing.transpose().solve(&rhs).ok_or_else(|| {
        Error::Invariant(format!(
            "duality pairing of K_{n} in degree {j} is singular"
        ))
    })?;
    CohomologyClass::from_terms(
        n,
        left.iter()
            .zip(coeffs)
            .filter_map(|(m, keep)| keep.then_some(*m)),
    )
}

/// `w_k = sum_{j <= k} Sq^{k-j} v_j` for `k = 0..=n`.
pub fn stiefel_whitney(n: usize) -> Result<Vec<CohomologyClass>> {
    let wu = wu_classes(n)?;
    stiefel_whitney_from_wu(n, &wu)
}

fn stiefel_whitney_from_wu(n: usize, wu: &[CohomologyClass]) -> Result<Vec<CohomologyClass>> {
    (0..=n)
        .map(|k| {
            let mut acc = CohomologyClass::zero(n)?;
            for (j, v) in wu.iter().enumerate().take(k + 1) {
                acc = acc.add(&v.sq(k - j)?)?;
            }
            Ok(acc)
        })
        .collect()
}

pub fn wu_data(n: usize) -> Result<WuData> {
    let wu = wu_classes(n)?;
    let sw = stiefel_whitney_from_wu(n, &wu)?;
    Ok(WuData { n, wu, sw })
}

/// Whether a report field is recomputed here or taken from a known theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Computed,
    Cited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Field<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn computed<T>(value: T) -> Field<T> {
    Field {
        value,
        provenance: Provenance::Computed,
    }
}

fn cited<T>(value: T) -> Field<T> {
    Field {
        value,
        provenance: Provenance::Cited,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ManifoldReport {
    pub n: usize,
    pub orientable: Field<bool>,
    pub span: Field<usize>,
    pub immersion_dim: Field<usize>,
    pub embedding_dim: Field<usize>,
    pub parallelizable: Field<bool>,
    pub cat: Field<usize>,
    /// Total Stiefel-Whitney class `1 + w_1 + ... + w_n`.
    pub total_sw: CohomologyClass,
}

pub fn manifold_report(n: usize) -> Result<ManifoldReport> {
    let sw = stiefel_whitney(n)?;
    let mut total = CohomologyClass::zero(n)?;
    for w in &sw {
        total = total.add(w)?;
    }
    let orientable = sw.get(1).is_none_or(CohomologyClass::is_zero);
    // tangent bundle is trivial for odd n and eta + (n-1) trivial for even n
    let odd = n % 2 == 1;
    Ok(ManifoldReport {
        n,
        orientable: computed(orientable),
        span: cited(if odd { n } else { n - 1 }),
        immersion_dim: cited(n + 1),
        embedding_dim: cited(if odd { n + 1 } else { n + 2 }),
        parallelizable: cited(odd),
        cat: computed(cup_length(n)?.length),
        total_sw: total,
    })
}

//! Integral cohomology of `K_n`, the wedge decomposition of its suspension,
//! and the cross checks tying them to the mod-2 ring and to `pi_1`.
//!
//! Integrally, `H^*(K_n; Z)` is `L^ev + R L^ev + R L^od_{Z2}` where `L` is the
//! exterior algebra on `n - 1` degree-one classes: the free part in degree `d`
//! has rank `C(n-1, d)` for even `d` and `C(n-1, d-1)` for odd `d`, and even
//! degrees `d >= 2` carry `C(n-1, d-1)` copies of `Z2`.
//!
//! The suspension splits as
//! `S^2 v (v_{i even} C(n-1,i) (S^{i+1} v S^{i+2})) v (v_{i odd} C(n-1,i) M^{i+2}(2))`.

use std::fmt;

use serde::Serialize;

use crate::binom::binomial;
use crate::cohomology::{check_n, poincare_polynomial};
use crate::error::{Error, Result};
use crate::pi1;

/// A finitely generated abelian group `Z^free (+) Z/t_1 (+) ... (+) Z/t_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AbelianGroup {
    pub free_rank: u64,
    /// Orders of the cyclic torsion summands, sorted ascending, each `>= 2`.
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn new(free_rank: u64, mut torsion: Vec<u64>) -> Result<Self> {
        if let Some(bad) = torsion.iter().find(|&&t| t < 2) {
            return Err(Error::Domain(format!("torsion order {bad} must be at least 2")));
        }
        torsion.sort_unstable();
        Ok(AbelianGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        AbelianGroup {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z^free (+) Z2^count`.
    pub fn with_z2(free_rank: u64, count: u64) -> Self {
        AbelianGroup {
            free_rank,
            torsion: vec![2; count as usize],
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of `Z2` summands.
    pub fn two_torsion(&self) -> u64 {
        self.torsion.iter().filter(|&&t| t % 2 == 0).count() as u64
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend(&other.torsion);
        torsion.sort_unstable();
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion,
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let t = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == t).count();
            parts.push(if run == 1 {
                format!("Z{t}")
            } else {
                format!("Z{t}^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `H^d(K_n; Z)` for `d = 0..=n`.
pub fn integral_cohomology(n: usize) -> Result<Vec<AbelianGroup>> {
    check_n(n)?;
    let m = n as i64 - 1;
    Ok((0..=n as i64)
        .map(|d| {
            if d % 2 == 0 {
                AbelianGroup::with_z2(binomial(m, d), binomial(m, d - 1))
            } else {
                AbelianGroup::free(binomial(m, d - 1))
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SummandKind {
    Sphere,
    /// Mod-2 Moore space `M^d(2) = S^{d-1} u_2 e^d`.
    Moore,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WedgeSummand {
    pub kind: SummandKind,
    pub dim: usize,
    pub multiplicity: u64,
}

impl fmt::Display for WedgeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity != 1 {
            write!(f, "{}x", self.multiplicity)?;
        }
        match self.kind {
            SummandKind::Sphere => write!(f, "S^{}", self.dim),
            SummandKind::Moore => write!(f, "M^{}(2)", self.dim),
        }
    }
}

/// Wedge summands of the suspension `Sigma K_n`, ordered by the exterior
/// degree `i` they come from.
pub fn splitting(n: usize) -> Result<Vec<WedgeSummand>> {
    check_n(n)?;
    if n < 2 {
        return Err(Error::Domain(
            "splitting needs n >= 2 (K_1 is the circle)".into(),
        ));
    }
    let mut out = vec![WedgeSummand {
        kind: SummandKind::Sphere,
        dim: 2,
        multiplicity: 1,
    }];
    for i in 1..n {
        let mult = binomial(n as i64 - 1, i as i64);
        if i % 2 == 1 {
            out.push(WedgeSummand {
                kind: SummandKind::Moore,
                dim: i + 2,
                multiplicity: mult,
            });
        } else {
            for dim in [i + 1, i + 2] {
                out.push(WedgeSummand {
                    kind: SummandKind::Sphere,
                    dim,
                    multiplicity: mult,
                });
            }
        }
    }
    Ok(out)
}

/// `H_k(K_n; Z)` for `k = 0..=n`, by desuspending the homology of the wedge.
pub fn homology_from_splitting(n: usize) -> Result<Vec<AbelianGroup>> {
    homology_of_wedge(n, &splitting(n)?)
}

fn homology_of_wedge(n: usize, summands: &[WedgeSummand]) -> Result<Vec<AbelianGroup>> {
    let mut groups = vec![AbelianGroup::trivial(); n + 1];
    groups[0] = AbelianGroup::free(1);
    for s in summands {
        // reduced H_k(K_n) = reduced H_{k+1}(Sigma K_n)
        let (k, group) = match s.kind {
            SummandKind::Sphere => (s.dim - 1, AbelianGroup::free(s.multiplicity)),
            SummandKind::Moore => (s.dim - 2, AbelianGroup::with_z2(0, s.multiplicity)),
        };
        if k == 0 || k > n {
            return Err(Error::Invariant(format!(
                "summand {s} desuspends to degree {k}, outside 1..={n}"
            )));
        }
        groups[k] = groups[k].direct_sum(&group);
    }
    Ok(groups)
}

/// Cohomology from homology by the universal coefficient theorem:
/// `H^d = Free(H_d) (+) Tors(H_{d-1})`.
pub fn cohomology_from_homology(homology: &[AbelianGroup]) -> Vec<AbelianGroup> {
    (0..homology.len())
        .map(|d| {
            let tors = if d == 0 {
                Vec::new()
            } else {
                homology[d - 1].torsion.clone()
            };
            AbelianGroup {
                free_rank: homology[d].free_rank,
                torsion: tors,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub n: usize,
    pub cohomology: Vec<AbelianGroup>,
    pub homology: Vec<AbelianGroup>,
    pub checks: Vec<CheckOutcome>,
}

impl ConsistencyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Cross-validates the mod-2 ring, the integral groups, the splitting and the
/// abelianized fundamental group. Mismatches are reported, not raised.
pub fn consistency_check(n: usize) -> Result<ConsistencyReport> {
    if n < 2 {
        return Err(Error::Domain("consistency check needs n >= 2".into()));
    }
    let coh = integral_cohomology(n)?;
    let hom = homology_from_splitting(n)?;
    let betti2 = poincare_polynomial(n)?;
    let mut checks = Vec::new();

    // (a) mod-2 dimensions from the integral groups
    let t = |d: usize| coh.get(d).map_or(0, AbelianGroup::two_torsion);
    let predicted: Vec<u64> = (0..=n).map(|d| coh[d].free_rank + t(d) + t(d + 1)).collect();
    checks.push(CheckOutcome {
        name: "uct-mod2",
        passed: predicted == betti2,
        detail: format!("from integral groups {predicted:?}, ring basis {betti2:?}"),
    });

    // (b) integral cohomology recovered from the splitting's homology
    let from_split = cohomology_from_homology(&hom);
    checks.push(CheckOutcome {
        name: "uct-splitting",
        passed: from_split == coh,
        detail: format!(
            "splitting gives [{}], direct gives [{}]",
            join(&from_split),
            join(&coh)
        ),
    });

    // (c) H_1 against the abelianized fundamental group
    let ab = pi1::abelianization(n)?;
    checks.push(CheckOutcome {
        name: "h1-abelianization",
        passed: ab == hom[1],
        detail: format!("H_1 = {}, pi_1^ab = {ab}", hom[1]),
    });

    // (d) Euler characteristic from either side
    let euler = |gs: &[AbelianGroup]| -> i64 {
        gs.iter()
            .enumerate()
            .map(|(d, g)| if d % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
            .sum()
    };
    let (ec, eh) = (euler(&coh), euler(&hom));
    let e2: i64 = betti2
        .iter()
        .enumerate()
        .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    checks.push(CheckOutcome {
        name: "euler-characteristic",
        passed: ec == 0 && eh == 0 && e2 == 0,
        detail: format!("cohomology {ec}, homology {eh}, mod 2 {e2}"),
    });

    Ok(ConsistencyReport {
        n,
        cohomology: coh,
        homology: hom,
        checks,
    })
}

fn join(groups: &[AbelianGroup]) -> String {
    groups
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(free: u64, count: u64) -> AbelianGroup {
        AbelianGroup::with_z2(free, count)
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(integral_cohomology(2).unwrap(), vec![z2(1, 0), z2(1, 0), z2(0, 1)]);
        assert_eq!(
            integral_cohomology(4).unwrap(),
            vec![z2(1, 0), z2(1, 0), z2(3, 3), z2(3, 0), z2(0, 1)]
        );
        assert_eq!(integral_cohomology(3).unwrap()[2], z2(1, 2));
    }

    #[test]
    fn splitting_examples() {
        let s = |n| {
            splitting(n)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" v ")
        };
        assert_eq!(s(2), "S^2 v M^3(2)");
        assert_eq!(s(3), "S^2 v 2xM^3(2) v S^3 v S^4");
        assert_eq!(s(4), "S^2 v 3xM^3(2) v 3xS^3 v 3xS^4 v M^5(2)");
        assert!(matches!(splitting(1), Err(Error::Domain(_))));
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_from_splitting(2).unwrap(), vec![z2(1, 0), z2(1, 1), z2(0, 0)]);
        assert_eq!(
            homology_from_splitting(3).unwrap(),
            vec![z2(1, 0), z2(1, 2), z2(1, 0), z2(1, 0)]
        );
        for n in 2..12 {
            let top = homology_from_splitting(n).unwrap()[n].clone();
            if n % 2 == 1 {
                assert_eq!(top, AbelianGroup::free(1), "n = {n}");
            } else {
                assert!(top.is_trivial(), "n = {n}");
            }
        }
    }

    #[test]
    fn consistency_small() {
        let r = consistency_check(4).unwrap();
        assert!(r.all_passed(), "{:?}", r.checks);
        // dim H^2(K_4; Z2) = 6 = 3 free + 3 torsion in degree 2 + 0 in degree 3
        assert_eq!(r.cohomology[2].free_rank, 3);
        assert_eq!(r.cohomology[2].two_torsion(), 3);
        assert_eq!(r.cohomology[3].two_torsion(), 0);
        assert!(consistency_check(1).is_err());
    }

    #[test]
    fn tampered_splitting_is_caught() {
        let mut s = splitting(4).unwrap();
        s.retain(|x| x.kind != SummandKind::Moore || x.dim != 5);
        let hom = homology_of_wedge(4, &s).unwrap();
        assert_ne!(cohomology_from_homology(&hom), integral_cohomology(4).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(z2(3, 3).to_string(), "Z^3 + Z2^3");
        assert_eq!(z2(0, 0).to_string(), "0");
        assert_eq!(z2(1, 1).to_string(), "Z + Z2");
        assert!(AbelianGroup::new(0, vec![1]).is_err());
    }
}

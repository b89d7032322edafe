//! `H^*(K_n x K_n; Z2) = H^*(K_n) (x) H^*(K_n)` and products of the degree-one
//! zero divisors `Rbar = R (x) 1 + 1 (x) R` and `Vbar_i = V_i (x) 1 + 1 (x) V_i`.
//!
//! The longest nonzero product of such factors (the zero-divisor cup length)
//! bounds the topological complexity of `K_n` from below.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{check_n, CohomologyClass, Monomial};
use crate::error::{Error, Result};

/// Refuse exhaustive searches over more canonical factor multisets than this.
pub const SEARCH_GUARD: u128 = 10_000_000;

/// Largest `m` for which [`tc_bounds`] runs the exhaustive search.
pub const TC_EXHAUSTIVE_MAX_M: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorClass {
    n: usize,
    terms: BTreeSet<(Monomial, Monomial)>,
}

impl TensorClass {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(TensorClass {
            n,
            terms: BTreeSet::new(),
        })
    }

    /// `1 (x) 1`.
    pub fn one(n: usize) -> Result<Self> {
        let u = Monomial::one(n)?;
        Self::from_pairs(n, [(u, u)])
    }

    /// F2-sum of the given pairs; repeated pairs cancel.
    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (Monomial, Monomial)>) -> Result<Self> {
        let mut acc = HashSet::new();
        for (a, b) in pairs {
            if a.n() != n || b.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: if a.n() != n { a.n() } else { b.n() },
                });
            }
            toggle(&mut acc, (a, b));
        }
        Ok(TensorClass {
            n,
            terms: acc.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &(Monomial, Monomial)> {
        self.terms.iter()
    }

    pub fn contains(&self, left: &Monomial, right: &Monomial) -> bool {
        self.terms.contains(&(*left, *right))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        Ok(TensorClass {
            n: self.n,
            terms: self.terms.symmetric_difference(&other.terms).copied().collect(),
        })
    }

    /// Image under the multiplication map `u (x) v -> u v`.
    pub fn diagonal(&self) -> Result<CohomologyClass> {
        CohomologyClass::from_terms(self.n, self.terms.iter().filter_map(|(u, v)| u.cup(v)))
    }

    /// Applies the same permutation of `{1..n-1}` to both tensor factors.
    pub fn permute(&self, perm: &[usize]) -> Self {
        TensorClass {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.permute(perm), b.permute(perm)))
                .collect(),
        }
    }
}

fn toggle(set: &mut HashSet<(Monomial, Monomial)>, pair: (Monomial, Monomial)) {
    if !set.remove(&pair) {
        set.insert(pair);
    }
}

fn same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

impl fmt::Display for TensorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(a, b)| format!("{a}(x){b}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize)]
struct RawPair {
    left: Monomial,
    right: Monomial,
}

impl Serialize for TensorClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw {
            n: usize,
            terms: Vec<RawPair>,
        }
        Raw {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|&(left, right)| RawPair { left, right })
                .collect(),
        }
        .serialize(s)
    }
}

/// `x (x) 1 + 1 (x) x` for homogeneous `x`.
pub fn zero_divisor(x: &CohomologyClass) -> Result<TensorClass> {
    if !x.is_homogeneous() {
        return Err(Error::Domain("zero divisors are formed from homogeneous classes".into()));
    }
    let one = Monomial::one(x.n())?;
    TensorClass::from_pairs(x.n(), x.terms().flat_map(|&m| [(m, one), (one, m)]))
}

/// Coefficient of `(u (x) v)(u' (x) v') = (-1)^{|v||u'|} uu' (x) vv'`, reduced mod 2.
fn graded_sign_mod2(v_degree: usize, u_degree: usize) -> u8 {
    let sign: i64 = if (v_degree * u_degree).is_multiple_of(2) { 1 } else { -1 };
    sign.rem_euclid(2) as u8
}

/// Product in the tensor square. Over F2 the graded sign is always `+1`.
pub fn tensor_mul(a: &TensorClass, b: &TensorClass) -> Result<TensorClass> {
    same_n(a.n, b.n)?;
    let mut acc = HashSet::with_capacity(a.terms.len() * b.terms.len().min(4));
    for (u, v) in &a.terms {
        for (u2, v2) in &b.terms {
            let coeff = graded_sign_mod2(v.degree(), u2.degree());
            assert_eq!(coeff, 1, "graded sign must reduce to 1 in characteristic 2");
            if let (Some(x), Some(y)) = (u.cup(u2), v.cup(v2)) {
                toggle(&mut acc, (x, y));
            }
        }
    }
    Ok(TensorClass {
        n: a.n,
        terms: acc.into_iter().collect(),
    })
}

/// A product `Rbar^r Vbar_1^{v_1} ... Vbar_{n-1}^{v_{n-1}}` of degree-one zero
/// divisors, recorded by its exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorMultiset {
    pub r: usize,
    /// `v[i]` is the exponent of `Vbar_{i+1}`.
    pub v: Vec<usize>,
}

impl FactorMultiset {
    pub fn len(&self) -> usize {
        self.r + self.v.iter().sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Expands the product in `H^*(K_n x K_n; Z2)`, stopping early at zero.
    pub fn evaluate(&self, n: usize) -> Result<TensorClass> {
        check_n(n)?;
        if self.v.len() > n - 1 {
            return Err(Error::Domain(format!(
                "{} V-exponents given but K_{n} has only {} generators",
                self.v.len(),
                n - 1
            )));
        }
        let mut acc = TensorClass::one(n)?;
        let rbar = zero_divisor(&Monomial::r(n)?.into())?;
        for _ in 0..self.r {
            acc = tensor_mul(&acc, &rbar)?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
        for (i, &e) in self.v.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let vbar = zero_divisor(&Monomial::v(n, i + 1)?.into())?;
            for _ in 0..e {
                acc = tensor_mul(&acc, &vbar)?;
                if acc.is_zero() {
                    return Ok(acc);
                }
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let power = |name: String, e: usize| if e == 1 { name } else { format!("{name}^{e}") };
        if self.r > 0 {
            parts.push(power("Rbar".into(), self.r));
        }
        for (i, &e) in self.v.iter().enumerate() {
            if e > 0 {
                parts.push(power(format!("Vbar{}", i + 1), e));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// The nonzero product `Vbar_1^3 Vbar_2^2 Vbar_3 ... Vbar_{n-1}` of length
/// `n + 2`, and the term that certifies it is nonzero.
#[derive(Clone, Debug, Serialize)]
pub struct LongProduct {
    pub n: usize,
    pub factors: FactorMultiset,
    pub product: TensorClass,
    /// `R V_1 ... V_{n-2} (x) R V_1 V_{n-1}`.
    pub certificate: (Monomial, Monomial),
}

pub fn long_product_witness(n: usize) -> Result<LongProduct> {
    check_n(n)?;
    if n < 3 {
        return Err(Error::Domain("the long zero-divisor product needs n >= 3".into()));
    }
    let mut v = vec![1; n - 1];
    v[0] = 3;
    v[1] = 2;
    let factors = FactorMultiset { r: 0, v };
    let product = factors.evaluate(n)?;
    let left_vars: Vec<usize> = (1..=n - 2).collect();
    let right_vars = [1, n - 1];
    let certificate = (
        Monomial::new(n, true, &left_vars)?,
        Monomial::new(n, true, &right_vars)?,
    );
    if product.is_zero() {
        return Err(Error::Invariant(format!("{factors} vanishes in K_{n} x K_{n}")));
    }
    if !product.contains(&certificate.0, &certificate.1) {
        return Err(Error::Invariant(format!(
            "{factors} is nonzero but lacks the term {}(x){}",
            certificate.0, certificate.1
        )));
    }
    Ok(LongProduct {
        n,
        factors,
        product,
        certificate,
    })
}

/// Outcome of an exhaustive search over products of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZclSearch {
    pub n: usize,
    pub len: usize,
    pub all_zero: bool,
    pub witness: Option<FactorMultiset>,
    /// Number of canonical multisets examined.
    pub cases: u128,
}

/// Partitions of `total` into at most `max_parts` positive parts, largest part
/// first, in reverse lexicographic order.
fn partitions(total: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, cap: usize, parts_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if parts_left == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, parts_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, max_parts, &mut Vec::new(), &mut out);
    out
}

fn partition_count(total: usize, max_parts: usize) -> u128 {
    // p(total, parts <= k) by the standard recurrence on a table
    let mut table = vec![vec![0u128; max_parts + 1]; total + 1];
    for row in table.iter_mut().take(1) {
        row.iter_mut().for_each(|x| *x = 1);
    }
    for t in 1..=total {
        for k in 1..=max_parts {
            table[t][k] = table[t][k - 1] + if t >= k { table[t - k][k] } else { 0 };
        }
    }
    table[total][max_parts]
}

/// Number of factor multisets of length `len` up to permuting the `V` indices.
pub fn canonical_count(n: usize, len: usize) -> u128 {
    (0..=len).map(|r| partition_count(len - r, n.saturating_sub(1))).sum()
}

/// Canonical multisets of length `len`: `Rbar` count ascending, then the
/// `V` multiplicities as a partition, largest parts on the smallest indices.
pub fn canonical_multisets(n: usize, len: usize) -> Vec<FactorMultiset> {
    let mut out = Vec::new();
    for r in 0..=len {
        for p in partitions(len - r, n.saturating_sub(1)) {
            out.push(FactorMultiset { r, v: p });
        }
    }
    out
}

/// Decides whether every product of `len` degree-one zero divisors vanishes,
/// evaluating one representative per orbit of the `V`-index permutations.
pub fn zcl_exhaustive(n: usize, len: usize) -> Result<ZclSearch> {
    check_n(n)?;
    if n < 2 {
        return Err(Error::Domain("zero-divisor search needs n >= 2".into()));
    }
    if len == 0 {
        return Err(Error::Domain("product length must be at least 1".into()));
    }
    let cases = canonical_count(n, len);
    if cases > SEARCH_GUARD {
        return Err(Error::Infeasible {
            what: format!("zero-divisor products of length {len} in K_{n} x K_{n}"),
            count: cases,
            limit: SEARCH_GUARD,
        });
    }
    let candidates = canonical_multisets(n, len);
    debug_assert_eq!(candidates.len() as u128, cases);
    let witness = candidates
        .par_iter()
        .map(|f| f.evaluate(n).map(|p| (!p.is_zero()).then(|| f.clone())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(ZclSearch {
        n,
        len,
        all_zero: witness.is_none(),
        witness,
        cases,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZclSource {
    /// Every length up to the first all-zero length was searched.
    Exhaustive,
    /// Lower end from the explicit long product, upper end from the known
    /// vanishing of all products of length `n + 3`.
    WitnessAndCited,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TcBounds {
    pub m: usize,
    pub zcl: usize,
    pub zcl_source: ZclSource,
    /// `zcl + 1`.
    pub lower: usize,
    /// `2 dim + 1` for a closed manifold (unreduced convention).
    pub upper: usize,
    pub witness: Option<FactorMultiset>,
}

/// Topological complexity bounds for `K_m`, unreduced convention.
pub fn tc_bounds(m: usize) -> Result<TcBounds> {
    check_n(m)?;
    if m < 2 {
        return Err(Error::Domain("TC bounds are reported for m >= 2".into()));
    }
    let (zcl, zcl_source, witness) = if m <= TC_EXHAUSTIVE_MAX_M {
        let mut best = None;
        let mut len = 1;
        loop {
            let s = zcl_exhaustive(m, len)?;
            if s.all_zero {
                break;
            }
            best = s.witness;
            len += 1;
        }
        (len - 1, ZclSource::Exhaustive, best)
    } else {
        let w = long_product_witness(m)?;
        (w.factors.len(), ZclSource::WitnessAndCited, Some(w.factors))
    };
    Ok(TcBounds {
        m,
        zcl,
        zcl_source,
        lower: zcl + 1,
        upper: 2 * m + 1,
        witness,
    })
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn class(n: usize) -> impl Strategy<Value = CohomologyClass> {
        (0..=n, any::<u64>()).prop_map(move |(d, pick)| {
            let b = crate::cohomology::basis(n, d).unwrap();
            let chosen = b.iter().enumerate().filter(|(i, _)| pick >> (i % 64) & 1 == 1);
            CohomologyClass::from_terms(n, chosen.map(|(_, m)| *m)).unwrap()
        })
    }

    fn triple(max: usize) -> impl Strategy<Value = (usize, CohomologyClass, CohomologyClass, CohomologyClass)> {
        (2..=max).prop_flat_map(|n| (Just(n), class(n), class(n), class(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn zero_divisors_die_on_the_diagonal((_, x, _, _) in triple(7)) {
            prop_assert!(zero_divisor(&x).unwrap().diagonal().unwrap().is_zero());
        }

        #[test]
        fn products_commute_and_associate((_, x, y, z) in triple(6)) {
            let (a, b, c) = (zero_divisor(&x).unwrap(), zero_divisor(&y).unwrap(), zero_divisor(&z).unwrap());
            prop_assert_eq!(tensor_mul(&a, &b).unwrap(), tensor_mul(&b, &a).unwrap());
            prop_assert_eq!(
                tensor_mul(&tensor_mul(&a, &b).unwrap(), &c).unwrap(),
                tensor_mul(&a, &tensor_mul(&b, &c).unwrap()).unwrap()
            );
        }

        #[test]
        fn diagonal_is_multiplicative((_, x, y, _) in triple(6)) {
            // the diagonal map is the ring map x (x) y -> x y
            let a = TensorClass::from_pairs(x.n(), x.terms().flat_map(|l| y.terms().map(move |r| (*l, *r)))).unwrap();
            prop_assert_eq!(a.diagonal().unwrap(), x.cup(&y).unwrap());
        }
    }

    #[test]
    fn vanishing_is_monotone_in_length() {
        for n in 2..=4 {
            let mut seen_zero = false;
            for len in 1..=n + 3 {
                let s = zcl_exhaustive(n, len).unwrap();
                assert!(!seen_zero || s.all_zero, "n={n} len={len}");
                seen_zero |= s.all_zero;
            }
            assert!(seen_zero);
        }
    }

    #[test]
    fn witness_certificate_for_all_small_n() {
        for n in 3..=8 {
            let w = long_product_witness(n).unwrap();
            assert_eq!(w.factors.len(), n + 2);
            let (l, r) = &w.certificate;
            assert!(w.product.contains(l, r));
        }
    }
}

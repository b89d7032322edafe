//! The mod-2 cohomology ring `H^*(K_n; Z2) = Z2[R, V_1..V_{n-1}] / (R^2, V_i^2 + R V_i)`.
//!
//! Every element is an F2-sum of monomials `R^e V_S` with `e` in `{0, 1}` and
//! `S` a subset of `{1..n-1}`. Multiplying two monomials collapses each shared
//! `V_i` into an extra factor of `R` (since `V_i^2 = R V_i`), and any second
//! factor of `R` kills the product.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binom::binomial;
use crate::error::{Error, Result};
use crate::f2::BitMatrix;

/// Largest supported ambient dimension: `V_1..V_{n-1}` must fit in one word.
pub const MAX_N: usize = 63;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("ambient dimension n must be at least 1".into()));
    }
    if n > MAX_N {
        return Err(Error::Capacity { n, max: MAX_N });
    }
    Ok(())
}

/// A basis element `R^eps V_S` of `H^*(K_n; Z2)`.
///
/// Bit `i` of `vars` is set when `V_i` is present; bit 0 is never used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    eps: bool,
    vars: u64,
}

impl Monomial {
    pub fn new(n: usize, eps: bool, vars: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut mask = 0u64;
        for &i in vars {
            if i == 0 || i >= n {
                return Err(Error::Domain(format!(
                    "V_{i} is not a generator of H^*(K_{n}); indices run over 1..={}",
                    n - 1
                )));
            }
            if mask & (1 << i) != 0 {
                return Err(Error::Domain(format!("V_{i} repeated in a monomial")));
            }
            mask |= 1 << i;
        }
        Ok(Monomial {
            n: n as u8,
            eps,
            vars: mask,
        })
    }

    pub(crate) fn from_raw(n: usize, eps: bool, vars: u64) -> Self {
        debug_assert!((1..=MAX_N).contains(&n));
        debug_assert_eq!(vars & 1, 0);
        debug_assert!(n == MAX_N + 1 || vars >> n == 0);
        Monomial {
            n: n as u8,
            eps,
            vars,
        }
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, false, &[])
    }

    pub fn r(n: usize) -> Result<Self> {
        Self::new(n, true, &[])
    }

    pub fn v(n: usize, i: usize) -> Result<Self> {
        Self::new(n, false, &[i])
    }

    /// The top class `R V_1 ... V_{n-1}`.
    pub fn top(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self::from_raw(n, true, full_mask(n)))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn eps(&self) -> bool {
        self.eps
    }

    pub fn var_mask(&self) -> u64 {
        self.vars
    }

    pub fn vars(&self) -> Vec<usize> {
        indices(self.vars).collect()
    }

    pub fn degree(&self) -> usize {
        usize::from(self.eps) + self.vars.count_ones() as usize
    }

    /// Product of two monomials, `None` when it vanishes.
    pub fn cup(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.n, other.n);
        let shared = (self.vars & other.vars).count_ones();
        let r_power = u32::from(self.eps) + u32::from(other.eps) + shared;
        (r_power < 2).then_some(Monomial {
            n: self.n,
            eps: r_power == 1,
            vars: self.vars | other.vars,
        })
    }

    /// `Sq^j` of a monomial: `R V_S` when `j = 1`, no `R`, `|S|` odd; zero
    /// otherwise; `Sq^0` is the identity.
    pub fn sq(&self, j: usize) -> Option<Monomial> {
        match j {
            0 => Some(*self),
            1 if !self.eps && self.vars.count_ones() % 2 == 1 => Some(Monomial {
                eps: true,
                ..*self
            }),
            _ => None,
        }
    }

    /// Applies a permutation of `{1..n-1}` to the `V` indices.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut vars = 0u64;
        for i in indices(self.vars) {
            vars |= 1 << perm[i - 1];
        }
        Monomial { vars, ..*self }
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Self::one(n);
        }
        let mut eps = false;
        let mut vars = Vec::new();
        for factor in text.split('*').map(str::trim) {
            if factor == "R" {
                if eps {
                    return Err(Error::Parse(format!("R repeated in {text:?}")));
                }
                eps = true;
            } else if let Some(idx) = factor.strip_prefix('V') {
                let i = idx
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad factor {factor:?} in {text:?}")))?;
                vars.push(i);
            } else {
                return Err(Error::Parse(format!("bad factor {factor:?} in {text:?}")));
            }
        }
        Self::new(n, eps, &vars)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    // bits 1..=n-1
    if n <= 1 {
        0
    } else {
        (u64::MAX >> (64 - (n - 1))) << 1
    }
}

pub(crate) fn indices(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl Ord for Monomial {
    /// Canonical order: degree, then `R` exponent, then the ascending index
    /// lists of the `V`'s compared lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.degree().cmp(&other.degree()))
            .then(self.eps.cmp(&other.eps))
            .then_with(|| indices(self.vars).cmp(indices(other.vars)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.eps && self.vars == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        if self.eps {
            f.write_str("R")?;
            first = false;
        }
        for i in indices(self.vars) {
            if !first {
                f.write_str("*")?;
            }
            write!(f, "V{i}")?;
            first = false;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawMonomial {
    eps: u8,
    vars: Vec<usize>,
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawMonomial {
            eps: u8::from(self.eps),
            vars: self.vars(),
        }
        .serialize(s)
    }
}

/// An F2-linear combination of monomials of `H^*(K_n; Z2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    n: usize,
    terms: BTreeSet<Monomial>,
}

impl CohomologyClass {
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(CohomologyClass {
            n,
            terms: BTreeSet::new(),
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Ok(Monomial::one(n)?.into())
    }

    /// Sums the given monomials over F2, so repeated terms cancel in pairs.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut class = Self::zero(n)?;
        for m in terms {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: m.n(),
                });
            }
            class.toggle(m);
        }
        Ok(class)
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms; `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.iter().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let terms = self.terms.symmetric_difference(&other.terms).copied().collect();
        Ok(CohomologyClass { n: self.n, terms })
    }

    pub fn cup(&self, other: &Self) -> Result<Self> {
        self.same_n(other)?;
        let mut out = CohomologyClass {
            n: self.n,
            terms: BTreeSet::new(),
        };
        for a in &self.terms {
            for b in &other.terms {
                if let Some(p) = a.cup(b) {
                    out.toggle(p);
                }
            }
        }
        Ok(out)
    }

    /// Linear extension of [`Monomial::sq`]. Requires a homogeneous class.
    pub fn sq(&self, j: usize) -> Result<Self> {
        if !self.is_homogeneous() {
            return Err(Error::Domain("Sq^j is applied to homogeneous classes only".into()));
        }
        let mut out = CohomologyClass {
            n: self.n,
            terms: BTreeSet::new(),
        };
        for m in &self.terms {
            if let Some(s) = m.sq(j) {
                out.toggle(s);
            }
        }
        Ok(out)
    }

    /// Coefficient of the top class `R V_1 ... V_{n-1}`.
    pub fn top_coefficient(&self) -> bool {
        self.terms
            .iter()
            .any(|m| m.eps && m.vars == full_mask(self.n))
    }

    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Self::zero(n);
        }
        let monos = text
            .split('+')
            .map(|t| Monomial::parse(n, t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, monos)
    }
}

impl From<Monomial> for CohomologyClass {
    fn from(m: Monomial) -> Self {
        CohomologyClass {
            n: m.n(),
            terms: BTreeSet::from([m]),
        }
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawClass {
    n: usize,
    terms: Vec<RawMonomial>,
}

impl Serialize for CohomologyClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawClass {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|m| RawMonomial {
                    eps: u8::from(m.eps),
                    vars: m.vars(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CohomologyClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawClass::deserialize(d)?;
        let monos = raw
            .terms
            .iter()
            .map(|t| {
                if t.eps > 1 {
                    return Err(Error::Parse(format!("eps must be 0 or 1, got {}", t.eps)));
                }
                Monomial::new(raw.n, t.eps == 1, &t.vars)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        CohomologyClass::from_terms(raw.n, monos).map_err(D::Error::custom)
    }
}

/// All monomials of degree `d`, in canonical order.
pub fn basis(n: usize, d: usize) -> Result<Vec<Monomial>> {
    check_n(n)?;
    if d > n {
        return Err(Error::Domain(format!("degree {d} exceeds dimension {n}")));
    }
    let mut out = Vec::with_capacity(basis_size(n, d) as usize);
    for eps in [false, true] {
        let k = d as i64 - i64::from(eps);
        if k < 0 || k as usize > n - 1 {
            continue;
        }
        for vars in subsets_of_size(n - 1, k as usize) {
            out.push(Monomial::from_raw(n, eps, vars << 1));
        }
    }
    out.sort();
    Ok(out)
}

fn basis_size(n: usize, d: usize) -> u64 {
    binomial(n as i64 - 1, d as i64) + binomial(n as i64 - 1, d as i64 - 1)
}

/// Bitmasks over `0..m` with exactly `k` bits set, in ascending numeric order.
pub(crate) fn subsets_of_size(m: usize, k: usize) -> Vec<u64> {
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let mut x: u64 = (1u64 << k) - 1;
    loop {
        out.push(x);
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.wrapping_add(c);
        if r == 0 {
            break;
        }
        let next = (((r ^ x) >> 2) / c) | r;
        if next > limit || next < x {
            break;
        }
        x = next;
    }
    out
}

/// Degree-one generators in the order `R, V_1, ..., V_{n-1}`.
pub fn generators(n: usize) -> Result<Vec<Monomial>> {
    check_n(n)?;
    let mut out = vec![Monomial::r(n)?];
    for i in 1..n {
        out.push(Monomial::v(n, i)?);
    }
    Ok(out)
}

pub fn cup(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    a.cup(b)
}

pub fn sq(j: usize, a: &CohomologyClass) -> Result<CohomologyClass> {
    a.sq(j)
}

/// `dim H^d(K_n; Z2)` for `d = 0..=n`.
pub fn poincare_polynomial(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok((0..=n).map(|d| basis_size(n, d)).collect())
}

/// Longest nonzero product of positive-degree classes, with a witness made of
/// degree-one generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CupLength {
    pub length: usize,
    pub witness: Vec<Monomial>,
}

/// Searches products of degree-one generators (the ring is generated in degree
/// one) by depth-first search with repetition, longest first found wins.
pub fn cup_length(n: usize) -> Result<CupLength> {
    let gens = generators(n)?;
    let mut best = Vec::new();
    let mut stack = Vec::new();
    let start = Monomial::one(n)?;
    dfs_cup(&gens, 0, start, &mut stack, &mut best, n);
    Ok(CupLength {
        length: best.len(),
        witness: best,
    })
}

fn dfs_cup(
    gens: &[Monomial],
    from: usize,
    acc: Monomial,
    stack: &mut Vec<Monomial>,
    best: &mut Vec<Monomial>,
    max: usize,
) {
    if stack.len() > best.len() {
        *best = stack.clone();
    }
    // degree bounds the length; stop once the bound is met
    if best.len() == max {
        return;
    }
    for (i, g) in gens.iter().enumerate().skip(from) {
        if let Some(next) = acc.cup(g) {
            stack.push(*g);
            dfs_cup(gens, i, next, stack, best, max);
            stack.pop();
            if best.len() == max {
                return;
            }
        }
    }
}

/// Matrix of the pairing `H^d x H^{n-d} -> H^n = Z2` in the canonical bases.
pub fn duality_pairing(n: usize, d: usize) -> Result<BitMatrix> {
    let left = basis(n, d)?;
    let right = basis(n, n - d)?;
    let top = Monomial::top(n)?;
    Ok(BitMatrix::from_fn(left.len(), right.len(), |a, b| {
        left[a].cup(&right[b]) == Some(top)
    }))
}

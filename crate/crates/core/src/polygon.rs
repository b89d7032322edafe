//! Short subsets and genetic codes of planar polygon spaces.
//!
//! For side lengths `l_1 <= ... <= l_n`, a subset `S` of `{1..n}` is short when
//! its lengths sum to less than the rest. The genetic code is the set of
//! maximal short subsets containing `n` under the domination order, where `T`
//! dominates `S` when some injection `f: S -> T` has `f(s) >= s`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tensor::{tc_bounds, TcBounds};

/// Largest number of sides for exhaustive subset enumeration.
pub const MAX_SIDES: usize = 24;

/// Subsets are bitmasks: bit `i - 1` stands for element `i`.
pub type SubsetMask = u32;

/// Nondecreasing exact side lengths, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthVector {
    lengths: Vec<BigRational>,
    /// Common-denominator integer copies of `lengths`.
    scaled: Vec<i128>,
    total: i128,
    epsilon: Option<BigRational>,
}

impl LengthVector {
    /// Sorts the input; rejects zero or negative entries.
    pub fn new(mut lengths: Vec<BigRational>) -> Result<Self> {
        if lengths.iter().any(|l| !l.is_positive()) {
            return Err(Error::Domain(
                "side lengths must be positive (use with_zeros for 0 entries)".into(),
            ));
        }
        lengths.sort();
        Self::build(lengths, None)
    }

    /// Accepts `0` entries and replaces each by a common small `epsilon`.
    ///
    /// With no override, `epsilon = 1 / (4 n q (1 + sum of positive lengths))`
    /// where `q` is the lcm of the positive lengths' denominators, so any sum
    /// of at most `n` epsilons stays below every nonzero gap between subset sums.
    pub fn with_zeros(lengths: Vec<BigRational>, epsilon: Option<BigRational>) -> Result<Self> {
        if lengths.iter().any(Signed::is_negative) {
            return Err(Error::Domain("side lengths must be nonnegative".into()));
        }
        if !lengths.iter().any(Zero::is_zero) {
            return Self::new(lengths);
        }
        let positive: Vec<&BigRational> = lengths.iter().filter(|l| l.is_positive()).collect();
        let eps = match epsilon {
            Some(e) if e.is_positive() => e,
            Some(_) => return Err(Error::Domain("epsilon must be positive".into())),
            None => {
                let q = positive
                    .iter()
                    .fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
                let sum: BigRational = positive.iter().copied().sum();
                let n = BigInt::from(lengths.len());
                let denom = BigRational::from_integer(4 * n * q) * (BigRational::one() + sum);
                denom.recip()
            }
        };
        let mut lengths: Vec<BigRational> = lengths
            .into_iter()
            .map(|l| if l.is_zero() { eps.clone() } else { l })
            .collect();
        lengths.sort();
        Self::build(lengths, Some(eps))
    }

    fn build(lengths: Vec<BigRational>, epsilon: Option<BigRational>) -> Result<Self> {
        let n = lengths.len();
        if n == 0 {
            return Err(Error::Domain("length vector is empty".into()));
        }
        if n > MAX_SIDES {
            return Err(Error::Infeasible {
                what: format!("subset enumeration for {n} sides"),
                count: 1u128 << n,
                limit: 1u128 << MAX_SIDES,
            });
        }
        let q = lengths.iter().fold(BigInt::one(), |acc, l| acc.lcm(l.denom()));
        let too_big = || Error::Domain("length vector too large for exact integer scaling".into());
        let scaled = lengths
            .iter()
            .map(|l| (l * &q).to_integer().to_i128().ok_or_else(too_big))
            .collect::<Result<Vec<i128>>>()?;
        let total = scaled
            .iter()
            .try_fold(0i128, |acc, &x| acc.checked_add(x))
            .filter(|t| t.checked_mul(2).is_some())
            .ok_or_else(too_big)?;
        Ok(LengthVector {
            lengths,
            scaled,
            total,
            epsilon,
        })
    }

    /// Parses comma-separated entries: integers, fractions `a/b`, or decimals.
    pub fn parse(text: &str, epsilon: Option<BigRational>) -> Result<Self> {
        let lengths = text
            .split(',')
            .map(|t| parse_rational(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::with_zeros(lengths, epsilon)
    }

    pub fn n(&self) -> usize {
        self.lengths.len()
    }

    pub fn lengths(&self) -> &[BigRational] {
        &self.lengths
    }

    /// The value substituted for zero entries, if any.
    pub fn epsilon(&self) -> Option<&BigRational> {
        self.epsilon.as_ref()
    }

    fn sum(&self, mask: SubsetMask) -> i128 {
        let mut m = mask;
        let mut acc = 0;
        while m != 0 {
            acc += self.scaled[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        acc
    }

    fn mask_is_short(&self, mask: SubsetMask) -> bool {
        2 * self.sum(mask) < self.total
    }
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((a, b)) = text.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?))
}

pub fn mask_from_elements(n: usize, elements: &[usize]) -> Result<SubsetMask> {
    let mut mask = 0;
    for &e in elements {
        if e == 0 || e > n || e > 32 {
            return Err(Error::Domain(format!("element {e} outside 1..={n}")));
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

/// Elements of a mask, largest first.
pub fn mask_elements(mask: SubsetMask) -> Vec<usize> {
    (0..32)
        .rev()
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i as usize + 1)
        .collect()
}

/// No subset sums to exactly half the perimeter.
pub fn is_generic(l: &LengthVector) -> bool {
    balancing_subset(l).is_none()
}

fn balancing_subset(l: &LengthVector) -> Option<SubsetMask> {
    let n = l.n();
    // complements swap roles, so only subsets containing n are checked
    let top = 1u32 << (n - 1);
    (0..top)
        .into_par_iter()
        .with_min_len(1 << 12)
        .map(|rest| rest | top)
        .find_first(|&mask| 2 * l.sum(mask) == l.total)
}

pub fn is_short(subset: &[usize], l: &LengthVector) -> Result<bool> {
    Ok(l.mask_is_short(mask_from_elements(l.n(), subset)?))
}

/// `t` dominates `s`: some injection `f: s -> t` has `f(x) >= x`. Equivalently,
/// `|s| <= |t|` and the descending lists compare entrywise.
pub fn is_dominated_by(s: &[usize], t: &[usize]) -> bool {
    let mut s = s.to_vec();
    let mut t = t.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    t.sort_unstable_by(|a, b| b.cmp(a));
    s.len() <= t.len() && s.iter().zip(&t).all(|(a, b)| a <= b)
}

/// Subsets covering `mask` in the domination order: add element 1, or move
/// one element `x` up to `x + 1`.
fn covers(mask: SubsetMask, n: usize) -> impl Iterator<Item = SubsetMask> {
    let add_one = (mask & 1 == 0).then_some(mask | 1);
    let shifts = (0..n - 1)
        .filter(move |&i| mask >> i & 1 == 1 && mask >> (i + 1) & 1 == 0)
        .map(move |i| mask & !(1 << i) | (1 << (i + 1)));
    add_one.into_iter().chain(shifts)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneticCode {
    pub n: usize,
    /// Each gene as its elements, largest first; genes in descending order.
    pub genes: Vec<Vec<usize>>,
}

impl fmt::Display for GeneticCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.genes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", format_subset(g))?;
        }
        f.write_str(">")
    }
}

pub fn format_subset(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Maximal short subsets containing `n`. A short subset is maximal exactly
/// when none of its covers is short, because shortness is closed downward.
pub fn genetic_code(l: &LengthVector) -> Result<GeneticCode> {
    if let Some(mask) = balancing_subset(l) {
        return Err(Error::NonGeneric {
            subset: mask_elements(mask),
        });
    }
    let n = l.n();
    let top = 1u32 << (n - 1);
    let mut genes: Vec<SubsetMask> = (0..top)
        .into_par_iter()
        .with_min_len(1 << 12)
        .map(|rest| rest | top)
        .filter(|&mask| l.mask_is_short(mask) && covers(mask, n).all(|c| !l.mask_is_short(c)))
        .collect();
    genes.sort_unstable_by_key(|&m| std::cmp::Reverse(mask_elements(m)));
    Ok(GeneticCode {
        n,
        genes: genes.into_iter().map(mask_elements).collect(),
    })
}

/// Genes with `n` removed.
pub fn gees(code: &GeneticCode) -> Vec<Vec<usize>> {
    code.genes
        .iter()
        .map(|g| g.iter().copied().filter(|&e| e != code.n).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Code `<{n}>`: the space is `RP^{n-3}`.
    pub rp: bool,
    /// Code `<{n, n-3, n-4, .., 1}>`: the space is `T^{n-3}`.
    pub torus: bool,
    /// Code `<{n, n-4, n-5, .., 1}>`: the space is `K_{n-3}`.
    pub klein_m: Option<usize>,
    pub tc: Option<TcBounds>,
}

fn single_gene(code: &GeneticCode, gene: &[usize]) -> bool {
    code.genes.len() == 1 && code.genes[0] == gene
}

fn run_below(n: usize, start: usize) -> Vec<usize> {
    std::iter::once(n).chain((1..=start).rev()).collect()
}

pub fn classify(code: &GeneticCode) -> Result<Classification> {
    let n = code.n;
    let rp = single_gene(code, &[n]);
    let torus = n >= 3 && single_gene(code, &run_below(n, n - 3));
    let klein_m = (n >= 4 && single_gene(code, &run_below(n, n - 4))).then_some(n - 3);
    let tc = match klein_m {
        Some(m) if m >= 2 => Some(tc_bounds(m)?),
        _ => None,
    };
    Ok(Classification {
        rp,
        torus,
        klein_m,
        tc,
    })
}

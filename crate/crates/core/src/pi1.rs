//! The fundamental group
//! `pi_1(K_n) = < a_1..a_n | a_j a_n = a_n a_j^-1 (j < n), a_i a_j = a_j a_i (i < j < n) >`.
//!
//! The `a_j` with `j < n` span a normal free abelian subgroup on which `a_n`
//! acts by inversion, so every element has a unique normal form
//! `a_1^{k_1} ... a_{n-1}^{k_{n-1}} a_n^m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::integral::AbelianGroup;
use crate::smith::invariant_factors;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("pi_1(K_n) needs n >= 1".into()));
    }
    Ok(())
}

/// A letter `a_gen^{+1}` or `a_gen^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupWord {
    n: usize,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        check_n(n)?;
        if let Some(l) = letters.iter().find(|l| l.gen == 0 || l.gen > n) {
            return Err(Error::Domain(format!(
                "generator a_{} out of range 1..={n}",
                l.gen
            )));
        }
        Ok(GroupWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Parses whitespace-separated tokens `a3`, `an`, `a2^-1`, `an^3`. The
    /// token `1` (or an empty string) is the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_n(n)?;
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?,
                ),
                None => (token, 1),
            };
            let idx = base
                .strip_prefix('a')
                .ok_or_else(|| Error::Parse(format!("bad generator {token:?}")))?;
            let gen = if idx == "n" {
                n
            } else {
                idx.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad generator {token:?}")))?
            };
            let letter = Letter {
                gen,
                inverse: exp < 0,
            };
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        same_n(self.n, other.n)?;
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        Ok(GroupWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> Self {
        GroupWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    inverse: !l.inverse,
                    ..*l
                })
                .collect(),
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let name = gen_name(self.n, l.gen);
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn gen_name(n: usize, gen: usize) -> String {
    if gen == n {
        "an".to_string()
    } else {
        format!("a{gen}")
    }
}

fn same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { left: a, right: b });
    }
    Ok(())
}

/// `a_1^{k_1} ... a_{n-1}^{k_{n-1}} a_n^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub n: usize,
    pub k: Vec<BigInt>,
    pub m: BigInt,
}

impl NormalForm {
    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(NormalForm {
            n,
            k: vec![BigInt::zero(); n - 1],
            m: BigInt::zero(),
        })
    }

    pub fn new(n: usize, k: Vec<BigInt>, m: BigInt) -> Result<Self> {
        check_n(n)?;
        if k.len() != n - 1 {
            return Err(Error::Domain(format!(
                "normal form for K_{n} needs {} exponents, got {}",
                n - 1,
                k.len()
            )));
        }
        Ok(NormalForm { n, k, m })
    }

    pub fn from_i64(n: usize, k: &[i64], m: i64) -> Result<Self> {
        Self::new(n, k.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(m))
    }

    /// The generator `a_gen` as a normal form.
    pub fn generator(n: usize, gen: usize) -> Result<Self> {
        let mut x = Self::identity(n)?;
        match gen {
            g if g == n => x.m = BigInt::one(),
            g if (1..n).contains(&g) => x.k[g - 1] = BigInt::one(),
            _ => return Err(Error::Domain(format!("generator a_{gen} out of range 1..={n}"))),
        }
        Ok(x)
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_zero() && self.k.iter().all(Zero::is_zero)
    }

    fn a_n_odd(&self) -> bool {
        self.m.is_odd()
    }

    pub fn inverse(&self) -> Self {
        // (k, m)^-1 = (-(-1)^m k, -m)
        let flip = !self.a_n_odd();
        NormalForm {
            n: self.n,
            k: self.k.iter().map(|x| if flip { -x } else { x.clone() }).collect(),
            m: -&self.m,
        }
    }

    /// Spells the normal form out as a word.
    pub fn to_word(&self) -> GroupWord {
        let mut letters = Vec::new();
        let mut push = |gen: usize, e: &BigInt| {
            let count: usize = e
                .abs()
                .try_into()
                .expect("exponent too large to spell as a word");
            letters.extend(std::iter::repeat_n(
                Letter {
                    gen,
                    inverse: e.is_negative(),
                },
                count,
            ));
        };
        for (j, e) in self.k.iter().enumerate() {
            push(j + 1, e);
        }
        push(self.n, &self.m);
        GroupWord {
            n: self.n,
            letters,
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let factors = self
            .k
            .iter()
            .enumerate()
            .map(|(j, e)| (j + 1, e))
            .chain(std::iter::once((self.n, &self.m)));
        for (gen, e) in factors {
            if e.is_zero() {
                continue;
            }
            let name = gen_name(self.n, gen);
            if e.is_one() {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// `(k, m) (k', m') = (k + (-1)^m k', m + m')`.
pub fn multiply(x: &NormalForm, y: &NormalForm) -> Result<NormalForm> {
    same_n(x.n, y.n)?;
    let odd = x.a_n_odd();
    let k = x
        .k
        .iter()
        .zip(&y.k)
        .map(|(a, b)| if odd { a - b } else { a + b })
        .collect();
    Ok(NormalForm {
        n: x.n,
        k,
        m: &x.m + &y.m,
    })
}

/// Collects a word into normal form, moving each `a_n^{+-1}` to the right past
/// the letters that follow it: `a_n a_j^e = a_j^{-e} a_n`.
pub fn reduce(w: &GroupWord) -> NormalForm {
    let mut acc = NormalForm::identity(w.n).expect("word has a valid n");
    for l in &w.letters {
        let step = if l.inverse { -1 } else { 1 };
        if l.gen == w.n {
            acc.m += step;
        } else {
            // a_n^m a_j^e = a_j^{(-1)^m e} a_n^m
            let e = if acc.a_n_odd() { -step } else { step };
            acc.k[l.gen - 1] += e;
        }
    }
    acc
}

/// The defining relators `a_j a_n a_j a_n^-1` and `a_i a_j a_i^-1 a_j^-1`.
pub fn relators(n: usize) -> Result<Vec<GroupWord>> {
    check_n(n)?;
    let l = |gen, inverse| Letter { gen, inverse };
    let mut out = Vec::new();
    for j in 1..n {
        out.push(GroupWord::new(
            n,
            vec![l(j, false), l(n, false), l(j, false), l(n, true)],
        )?);
    }
    for i in 1..n {
        for j in i + 1..n {
            out.push(GroupWord::new(
                n,
                vec![l(i, false), l(j, false), l(i, true), l(j, true)],
            )?);
        }
    }
    Ok(out)
}

/// `pi_1(K_n)^ab`, from the Smith normal form of the abelianized relators.
pub fn abelianization(n: usize) -> Result<AbelianGroup> {
    let rows: Vec<Vec<i64>> = relators(n)?
        .iter()
        .map(|w| {
            let mut row = vec![0i64; n];
            for l in w.letters() {
                row[l.gen - 1] += if l.inverse { -1 } else { 1 };
            }
            row
        })
        .collect();
    let factors = invariant_factors(&rows);
    let free = (n - factors.len()) as u64;
    let torsion = factors
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| d as u64)
        .collect();
    AbelianGroup::new(free, torsion)
}

/// Image of the torus generator `g_j` under the double cover `T^n -> K_n`.
pub fn double_cover_image(n: usize, j: usize) -> Result<NormalForm> {
    let mut x = NormalForm::identity(n)?;
    match j {
        j if j == n => x.m = BigInt::from(2),
        j if (1..n).contains(&j) => x.k[j - 1] = BigInt::one(),
        _ => return Err(Error::Domain(format!("torus generator g_{j} out of range"))),
    }
    Ok(x)
}

/// Membership in the index-2 image of `pi_1(T^n)`: the `a_n` exponent is even.
pub fn in_double_cover_image(x: &NormalForm) -> bool {
    x.m.is_even()
}

//! One run over every computable claim about `K_n`, reported as a list of
//! named checks.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::char_classes::{stiefel_whitney, wu_classes};
use crate::cohomology::{
    basis, cup_length, duality_pairing, poincare_polynomial, CohomologyClass, Monomial,
};
use crate::error::{Error, Result};
use crate::geometry::{
    build_mesh, embedding_point, immersion_point, self_intersection_scan, torus_point,
    ImmersionParams, Resolution, ScanOptions, Target, TorusParams, WELD_TOLERANCE,
};
use crate::integral::{consistency_check, homology_from_splitting, integral_cohomology, AbelianGroup};
use crate::pi1::{abelianization, reduce, relators, GroupWord, Letter, NormalForm};
use crate::polygon::{classify, genetic_code, LengthVector};
use crate::tensor::{long_product_witness, tc_bounds, zcl_exhaustive};

pub const SCHEMA: &str = "1";
/// Smallest accepted `max_n`.
pub const MIN_MAX_N: usize = 4;
/// Largest accepted `max_n`; beyond it the sweeps leave the time budget.
pub const MAX_MAX_N: usize = 12;

/// The rendered `H^*(K_4; Z2)` table, as expected.
pub const K4_TABLE_GOLDEN: &str = include_str!("golden/k4_table.txt");

const SEED: u64 = 0x4b6e_2024;

/// A Steenrod square on monomials: `sq(x, j)`.
pub type SqFn<'a> = &'a (dyn Fn(&Monomial, usize) -> Option<Monomial> + Sync);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(id: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            id,
            passed,
            detail: detail.into(),
        }
    }

    fn from_result(id: &'static str, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Check::new(id, true, detail),
            Err(e) => Check::new(id, false, e.to_string()),
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Invariant(msg()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub max_n: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

// ---------------------------------------------------------------------------
// cohomology table

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub low: Monomial,
    pub high: Monomial,
    /// `Sq^1 low = high`.
    pub linked: bool,
}

/// `H^*(K_n; Z2)` laid out with `V_S` next to `R V_S`, one row per subset `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub n: usize,
    pub dims: Vec<u64>,
    pub rows: Vec<TableRow>,
}

pub fn cohomology_table(n: usize) -> Result<CohomologyTable> {
    cohomology_table_with(n, &|m: &Monomial, j| m.sq(j))
}

pub fn cohomology_table_with(n: usize, sq: SqFn<'_>) -> Result<CohomologyTable> {
    let dims = poincare_polynomial(n)?;
    let mut rows = Vec::new();
    for size in 0..n {
        for low in basis(n, size)?.into_iter().filter(|m| !m.eps()) {
            let high = Monomial::new(n, true, &low.vars())?;
            let linked = sq(&low, 1).as_ref() == Some(&high);
            rows.push(TableRow { low, high, linked });
        }
    }
    Ok(CohomologyTable { n, dims, rows })
}

impl CohomologyTable {
    /// Columns `H^0..H^n`; `---` joins a class to its `Sq^1`.
    pub fn render(&self) -> String {
        let cols = self.n + 1;
        let header: Vec<String> = (0..cols).map(|d| format!("H^{d}")).collect();
        let mut width: Vec<usize> = header.iter().map(String::len).collect();
        for row in &self.rows {
            let d = row.low.degree();
            width[d] = width[d].max(row.low.to_string().len());
            width[d + 1] = width[d + 1].max(row.high.to_string().len());
        }
        let line = |cells: &[String], link: Option<usize>| {
            let mut s = String::new();
            for (c, cell) in cells.iter().enumerate() {
                if c > 0 {
                    s.push_str(if link == Some(c - 1) { " --- " } else { "     " });
                }
                let _ = write!(s, "{cell:<w$}", w = width[c]);
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        let _ = writeln!(out, "{}", line(&header, None));
        let _ = writeln!(
            out,
            "{}",
            "-".repeat(width.iter().sum::<usize>() + 5 * (cols - 1))
        );
        for row in &self.rows {
            let d = row.low.degree();
            let mut cells = vec![String::new(); cols];
            cells[d] = row.low.to_string();
            cells[d + 1] = row.high.to_string();
            let _ = writeln!(out, "{}", line(&cells, row.linked.then_some(d)));
        }
        let dims: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "dims {}", dims.join(" "));
        out
    }
}

/// Compares the `K_4` table built with `sq` to the golden rendering.
pub fn k4_table_check(sq: SqFn<'_>) -> Check {
    let r = cohomology_table_with(4, sq).and_then(|t| {
        let linked: Vec<String> = t
            .rows
            .iter()
            .filter(|r| r.linked)
            .map(|r| r.low.to_string())
            .collect();
        let total: u64 = t.dims.iter().sum();
        ensure(t.render() == K4_TABLE_GOLDEN, || {
            "rendered table differs from the golden copy".into()
        })?;
        Ok(format!(
            "{total} basis elements, dims {:?}, Sq1 links {}",
            t.dims,
            linked.join(", ")
        ))
    });
    Check::from_result("k4-cohomology-table", r)
}

// ---------------------------------------------------------------------------
// ring oracle

/// Product of two monomials computed in the free polynomial ring
/// `Z2[R, V_1..V_{n-1}]` and reduced by `R^2 = 0`, `V_i^2 = R V_i`.
pub fn free_polynomial_product(a: &Monomial, b: &Monomial) -> Result<CohomologyClass> {
    let n = a.n();
    let exps = |m: &Monomial| {
        let mut e = vec![0u32; n];
        e[0] = u32::from(m.eps());
        for v in m.vars() {
            e[v] += 1;
        }
        e
    };
    let (ea, eb) = (exps(a), exps(b));
    let mut terms: BTreeMap<Vec<u32>, bool> = BTreeMap::new();
    let start: Vec<u32> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
    let mut work = vec![start];
    while let Some(mut e) = work.pop() {
        if e[0] >= 2 {
            continue;
        }
        if let Some(i) = (1..n).find(|&i| e[i] >= 2) {
            e[i] -= 1;
            e[0] += 1;
            work.push(e);
            continue;
        }
        *terms.entry(e).or_insert(false) ^= true;
    }
    let monos = terms
        .into_iter()
        .filter(|(_, c)| *c)
        .map(|(e, _)| {
            let vars: Vec<usize> = (1..n).filter(|&i| e[i] == 1).collect();
            Monomial::new(n, e[0] == 1, &vars)
        })
        .collect::<Result<Vec<_>>>()?;
    CohomologyClass::from_terms(n, monos)
}

fn random_class(rng: &mut StdRng, n: usize) -> Result<CohomologyClass> {
    let d = rng.gen_range(0..=n);
    let monos: Vec<Monomial> = basis(n, d)?.into_iter().filter(|_| rng.gen_bool(0.5)).collect();
    CohomologyClass::from_terms(n, monos)
}

fn ring_oracle(n_max: usize) -> Result<String> {
    let mut pairs = 0usize;
    for n in 1..=n_max {
        let all: Vec<Monomial> = (0..=n).map(|d| basis(n, d)).collect::<Result<Vec<_>>>()?.concat();
        for a in &all {
            for b in &all {
                let fast = CohomologyClass::from_terms(n, [*a])?
                    .cup(&CohomologyClass::from_terms(n, [*b])?)?;
                let slow = free_polynomial_product(a, b)?;
                ensure(fast == slow, || format!("{a} * {b}: {fast} vs oracle {slow}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} basis pairs agree with the free-polynomial oracle for n <= {n_max}"))
}

fn ring_laws(n_max: usize, triples: usize) -> Result<String> {
    (2..=n_max).into_par_iter().try_for_each(|n| -> Result<()> {
        let mut rng = StdRng::seed_from_u64(SEED ^ n as u64);
        for _ in 0..triples {
            let (a, b, c) = (
                random_class(&mut rng, n)?,
                random_class(&mut rng, n)?,
                random_class(&mut rng, n)?,
            );
            ensure(a.cup(&b)? == b.cup(&a)?, || format!("n={n}: {a} and {b} do not commute"))?;
            ensure(a.cup(&b)?.cup(&c)? == a.cup(&b.cup(&c)?)?, || {
                format!("n={n}: ({a})({b})({c}) not associative")
            })?;
        }
        Ok(())
    })?;
    Ok(format!("commutative and associative on {triples} random triples for each 2 <= n <= {n_max}"))
}

// ---------------------------------------------------------------------------

fn cat_and_duality(n_max: usize) -> Result<String> {
    for n in 1..=n_max {
        let cl = cup_length(n)?;
        ensure(cl.length == n, || format!("cup length of K_{n} is {}", cl.length))?;
        for d in 0..=n {
            ensure(duality_pairing(n, d)?.is_nonsingular(), || {
                format!("pairing H^{d} x H^{} singular for n={n}", n - d)
            })?;
        }
    }
    Ok(format!("cup length n and nonsingular pairings for 1 <= n <= {n_max}"))
}

fn characteristic_classes(n_max: usize) -> Result<String> {
    for n in 1..=n_max {
        let w = stiefel_whitney(n)?;
        for (k, class) in w.iter().enumerate() {
            let expected = match k {
                0 => CohomologyClass::one(n)?,
                1 if n % 2 == 0 => CohomologyClass::from_terms(n, [Monomial::r(n)?])?,
                _ => CohomologyClass::zero(n)?,
            };
            ensure(*class == expected, || format!("w_{k}(K_{n}) = {class}"))?;
        }
        let v = wu_classes(n)?;
        ensure(v.len() == n + 1, || format!("{} Wu classes for n={n}", v.len()))?;
    }
    Ok(format!("w = 1 + R (n even), w = 1 (n odd) for 1 <= n <= {n_max}"))
}

fn integral_checks(n_max: usize) -> Result<String> {
    for n in 2..=n_max {
        let report = consistency_check(n)?;
        let failure = report.failures().next().map(|f| format!("n={n}: {} failed: {}", f.name, f.detail));
        if let Some(msg) = failure {
            return Err(Error::Invariant(msg));
        }
    }
    let z = AbelianGroup::free(1);
    let h = integral_cohomology(2)?;
    ensure(h == vec![z.clone(), z.clone(), AbelianGroup::with_z2(0, 1)], || {
        format!("H^*(K_2; Z) = {h:?}")
    })?;
    let h1 = &homology_from_splitting(2)?[1];
    ensure(*h1 == AbelianGroup::with_z2(1, 1), || format!("H_1(K_2) = {h1}"))?;
    Ok(format!(
        "consistency identities hold for 2 <= n <= {n_max}; H^*(K_2; Z) = Z, Z, Z2; H_1(K_2) = Z + Z2"
    ))
}

fn long_products(n_max: usize) -> Result<String> {
    for n in 3..=n_max {
        let w = long_product_witness(n)?;
        ensure(!w.product.is_zero(), || format!("witness product zero for n={n}"))?;
        let (l, r) = &w.certificate;
        ensure(w.product.contains(l, r), || format!("n={n}: term {l}(x){r} missing"))?;
    }
    Ok(format!("witness products nonzero with the certified term for 3 <= n <= {n_max}"))
}

fn zcl_vanishing(n_max: usize) -> Result<String> {
    let mut cases = 0;
    for n in 3..=n_max {
        let s = zcl_exhaustive(n, n + 3)?;
        ensure(s.all_zero, || format!("n={n}: nonzero product {:?}", s.witness.map(|w| w.to_string())))?;
        cases += s.cases;
    }
    let tc = tc_bounds(4)?;
    ensure((tc.lower, tc.upper) == (7, 9), || {
        format!("tc bounds for K_4 are ({}, {})", tc.lower, tc.upper)
    })?;
    Ok(format!(
        "all {cases} products of n+3 zero divisors vanish for 3 <= n <= {n_max}; TC(K_4) in [7, 9]"
    ))
}

// ---------------------------------------------------------------------------
// fundamental group

/// Normal form by string rewriting: `a_n^s a_i^e -> a_i^-e a_n^s`,
/// `a_i^e a_j^f -> a_j^f a_i^e` for `j < i < n`, and free cancellation, applied
/// until no rule fires.
pub fn rewrite_normal_form(w: &GroupWord) -> Result<NormalForm> {
    let n = w.n();
    let mut word: Vec<(usize, i8)> = w
        .letters()
        .iter()
        .map(|l| (l.gen, if l.inverse { -1 } else { 1 }))
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            let (a, b) = (word[i], word[i + 1]);
            if a.0 == b.0 && a.1 == -b.1 {
                word.drain(i..i + 2);
                changed = true;
                i = i.saturating_sub(1);
                continue;
            }
            if a.0 == n && b.0 < n {
                word[i] = (b.0, -b.1);
                word[i + 1] = a;
                changed = true;
            } else if a.0 < n && b.0 < n && b.0 < a.0 {
                word.swap(i, i + 1);
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    let mut k = vec![BigInt::zero(); n - 1];
    let mut m = BigInt::zero();
    for (g, e) in word {
        if g == n {
            m += e;
        } else {
            k[g - 1] += e;
        }
    }
    NormalForm::new(n, k, m)
}

fn all_words(n: usize, len: usize) -> Vec<Vec<Letter>> {
    let alphabet: Vec<Letter> = (1..=n)
        .flat_map(|gen| [false, true].map(|inverse| Letter { gen, inverse }))
        .collect();
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<Letter>| {
                alphabet.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn pi1_checks(oracle_n: usize, word_len: usize, ab_n: usize) -> Result<String> {
    for n in 1..=ab_n {
        for r in relators(n)? {
            ensure(reduce(&r).is_identity(), || format!("relator {r} is not trivial"))?;
        }
    }
    let mut words = 0;
    for n in 1..=oracle_n {
        let all = all_words(n, word_len);
        words += all.len();
        all.into_par_iter().try_for_each(|letters| -> Result<()> {
            let w = GroupWord::new(n, letters)?;
            let (a, b) = (reduce(&w), rewrite_normal_form(&w)?);
            ensure(a == b, || format!("{w}: {a} vs rewriting {b}"))
        })?;
    }
    for n in 2..=ab_n {
        let ab = abelianization(n)?;
        let h1 = homology_from_splitting(n)?[1].clone();
        ensure(ab == h1, || format!("n={n}: abelianization {ab} vs H_1 {h1}"))?;
    }
    Ok(format!(
        "relators trivial; {words} words of length <= {word_len} match rewriting for n <= {oracle_n}; abelianization = H_1 for n <= {ab_n}"
    ))
}

// ---------------------------------------------------------------------------
// geometry

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

fn boundary_identity(samples: usize) -> Result<String> {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut worst: f64 = 0.0;
    for n in 2..=4 {
        for _ in 0..samples {
            let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.0..TAU)).collect();
            let neg: Vec<f64> = th.iter().map(|x| -x).collect();
            let a = immersion_point(n, &th, 0.0)?;
            let b = immersion_point(n, &neg, PI)?;
            let s: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            worst = worst.max(dist(&s, &vec![0.0; n + 1]));
            let ea = embedding_point(n, &th, 0.0)?;
            let eb = embedding_point(n, &neg, PI)?;
            let s: Vec<f64> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
            worst = worst.max(dist(&s, &vec![0.0; n + 2]));
        }
    }
    ensure(worst < WELD_TOLERANCE, || format!("largest defect {worst:e}"))?;
    Ok(format!("{samples} samples each for n = 2, 3, 4; largest defect {worst:.1e}"))
}

fn radius_band() -> Result<String> {
    for n in 2..=12 {
        let p = ImmersionParams::new(n)?;
        let (lo, hi) = p.radius_band();
        for k in 0..=10_000 {
            let r = p.radius(PI * k as f64 / 10_000.0);
            ensure(lo <= r && r <= hi, || format!("n={n}: r = {r} outside [{lo}, {hi}]"))?;
        }
    }
    Ok("r(t) stays in 1/2 +- pi^2 d / 4 on 10001 samples for 2 <= n <= 12".into())
}

fn torus_symmetry(samples: usize) -> Result<String> {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    for n in 2..=8 {
        let p = TorusParams::standard(n)?;
        for _ in 0..samples {
            let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-TAU..TAU)).collect();
            let neg: Vec<f64> = th.iter().map(|x| -x).collect();
            let (a, b) = (torus_point(&p, &th)?, torus_point(&p, &neg)?);
            ensure((a[0] - b[0]).abs() < 1e-9, || format!("n={n}: x_1 not even"))?;
            for i in 1..n {
                ensure((a[i] + b[i]).abs() < 1e-9, || format!("n={n}: x_{} not odd", i + 1))?;
            }
        }
    }
    Ok(format!("x_1 even and x_i (i >= 2) odd on {samples} samples for 2 <= n <= 8"))
}

fn nested_family() -> Result<String> {
    for n in 2..=10 {
        let big_d = ImmersionParams::new(n)?.big_d;
        let lo = (2f64.powi(n as i32) - 3.0) * big_d;
        let hi = (2f64.powi(n as i32) - 2.0) * big_d;
        let (mut min_x, mut max_x) = (f64::MAX, f64::MIN);
        for k in 0..=100 {
            let last = big_d * (1.0 + k as f64 / 100.0);
            let mut radii: Vec<f64> = (1..n - 1).map(|i| 2f64.powi((n - i) as i32) * big_d).collect();
            radii.push(last);
            let p = TorusParams::new(radii)?;
            let x = torus_point(&p, &vec![0.0; n - 1])?[0];
            ensure((x - p.max_x()).abs() < 1e-12, || format!("n={n}: x(0) differs from radius sum"))?;
            min_x = min_x.min(x);
            max_x = max_x.max(x);
        }
        ensure((min_x - lo).abs() < 1e-9 && (max_x - hi).abs() < 1e-9, || {
            format!("n={n}: max x ranges over [{min_x}, {max_x}], expected [{lo}, {hi}]")
        })?;
    }
    Ok("maximum x spans [(2^n - 3) D, (2^n - 2) D] for 2 <= n <= 10".into())
}

/// Reach of the immersion's self-intersections away from the boundary circles.
pub const IMMERSION_REACH_LIMIT: f64 = 0.4;

fn klein_bottle_scans(res: Resolution, radius: f64) -> Result<Vec<Check>> {
    let imm = build_mesh(2, Target::Immersion, res)?;
    let emb = build_mesh(2, Target::Embedding, res)?;
    let (ri, re) = rayon::join(
        || self_intersection_scan(&imm, ScanOptions::new(radius)),
        || self_intersection_scan(&emb, ScanOptions::new(radius)),
    );
    let (ri, re) = (ri?, re?);
    let reach = ri.max_boundary_distance.unwrap_or(0.0);
    let crossing = ri.collisions.iter().all(|c| {
        let ta = c.params_a.as_ref().map_or(0.0, |p| p[1]);
        let tb = c.params_b.as_ref().map_or(0.0, |p| p[1]);
        (ta < PI / 2.0) != (tb < PI / 2.0)
    });
    Ok(vec![
        Check::new(
            "immersion-self-intersections",
            !ri.is_empty() && crossing,
            format!(
                "{} close pairs at {res}, radius {radius}; each joins t < pi/2 to t > pi/2: {crossing}",
                ri.collision_count
            ),
        ),
        Check::new(
            "immersion-self-intersection-reach",
            !ri.is_empty() && reach < IMMERSION_REACH_LIMIT,
            format!("largest min(t, pi - t) over close pairs is {reach:.4}, limit {IMMERSION_REACH_LIMIT}"),
        ),
        Check::new(
            "embedding-scan-empty",
            re.is_empty(),
            format!("{} close pairs at {res}, radius {radius}", re.collision_count),
        ),
    ])
}

fn three_dim_mesh() -> Result<String> {
    let res = Resolution { theta: 24, t: 48 };
    let m = build_mesh(3, Target::Embedding, res)?;
    let residual = m.weld_residual.unwrap_or(f64::INFINITY);
    ensure(residual < WELD_TOLERANCE, || format!("weld residual {residual:e}"))?;
    let scan = self_intersection_scan(&m, ScanOptions::new(1e-2))?;
    ensure(scan.is_empty(), || format!("{} close pairs", scan.collision_count))?;
    Ok(format!(
        "K_3 in R^5 at {res}: {} vertices, weld residual {residual:.1e}, no close pairs at radius 0.01",
        m.vertex_count()
    ))
}

// ---------------------------------------------------------------------------

fn polygon_examples() -> Result<String> {
    let cases = [
        ("1,1,1,1,1,4", "<{6}>"),
        ("0,0,0,1,1,1", "<{6,3,2,1}>"),
        ("0,0,1,1,1,2", "<{6,2,1}>"),
    ];
    for (lengths, expected) in cases {
        let code = genetic_code(&LengthVector::parse(lengths, None)?)?;
        ensure(code.to_string() == expected, || format!("({lengths}) gives {code}"))?;
    }
    let code = genetic_code(&LengthVector::parse("0,0,1,1,1,2", None)?)?;
    let c = classify(&code)?;
    ensure(c.klein_m == Some(3), || format!("{code} classified as {c:?}"))?;
    Ok("codes <{6}>, <{6,3,2,1}>, <{6,2,1}> reproduced; <{6,2,1}> is K_3".into())
}

/// Runs every check. `max_n` extends the dimension sweeps.
pub fn verify(max_n: usize) -> Result<VerifyReport> {
    if max_n < MIN_MAX_N {
        return Err(Error::Domain(format!("max_n must be at least {MIN_MAX_N}, got {max_n}")));
    }
    if max_n > MAX_MAX_N {
        return Err(Error::Infeasible {
            what: format!("verification sweep up to n = {max_n}"),
            count: max_n as u128,
            limit: MAX_MAX_N as u128,
        });
    }
    let upto = |bound: usize| bound.max(max_n);
    let mut checks = vec![
        k4_table_check(&|m: &Monomial, j| m.sq(j)),
        Check::from_result("cup-free-polynomial-oracle", ring_oracle(4)),
        Check::from_result("cup-ring-laws", ring_laws(8, 10_000)),
        Check::from_result("cup-length-and-duality", cat_and_duality(upto(10))),
        Check::from_result("stiefel-whitney-classes", characteristic_classes(upto(10))),
        Check::from_result("integral-consistency", integral_checks(upto(12))),
        Check::from_result("long-product-witness", long_products(8)),
        Check::from_result("zero-divisor-vanishing", zcl_vanishing(6)),
        Check::from_result("pi1-normal-forms", pi1_checks(4, 6, upto(10))),
        Check::from_result("boundary-identity", boundary_identity(10_000)),
        Check::from_result("radius-band", radius_band()),
        Check::from_result("torus-symmetry", torus_symmetry(2_000)),
        Check::from_result("nested-torus-family", nested_family()),
    ];
    match klein_bottle_scans(Resolution { theta: 200, t: 400 }, 1e-2) {
        Ok(scans) => checks.extend(scans),
        Err(e) => checks.push(Check::new("klein-bottle-scans", false, e.to_string())),
    }
    checks.push(Check::from_result("k3-mesh", three_dim_mesh()));
    checks.push(Check::from_result("genetic-codes", polygon_examples()));
    Ok(VerifyReport {
        schema: SCHEMA,
        max_n,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
//!
//! Every check uses an oracle written here, independent of the library code
//! it exercises, wherever one is practical.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{PI, TAU};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use klein_core::char_classes::stiefel_whitney;
use klein_core::cohomology::{basis, cup_length, duality_pairing, poincare_polynomial, CohomologyClass, Monomial};
use klein_core::geometry::{
    build_mesh, embedding_point, immersion_point, radius, self_intersection_scan, torus_point, ImmersionParams,
    Resolution, ScanOptions, Target, TorusParams,
};
use klein_core::integral::{consistency_check, homology_from_splitting, integral_cohomology, AbelianGroup};
use klein_core::pi1::{abelianization, reduce, relators, GroupWord, Letter, NormalForm};
use klein_core::polygon::{classify, genetic_code, LengthVector};
use klein_core::tensor::{long_product_witness, tc_bounds, zcl_exhaustive};
use klein_core::verify::rewrite_normal_form;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

const BIN: &str = env!("CARGO_BIN_EXE_klein-forge");

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: klein_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn mono(n: usize, eps: bool, vars: &[usize]) -> Monomial {
    Monomial::new(n, eps, vars).unwrap()
}

fn run_bin(args: &[&str]) -> Result<(std::process::Output, Duration), String> {
    let started = Instant::now();
    let out = Command::new(BIN).args(args).output().map_err(|e| e.to_string())?;
    Ok((out, started.elapsed()))
}

const K4_TABLE: &str = "\
H^0     H^1     H^2       H^3          H^4
-------------------------------------------------
1       R
        V1  --- R*V1
        V2  --- R*V2
        V3  --- R*V3
                V1*V2     R*V1*V2
                V1*V3     R*V1*V3
                V2*V3     R*V2*V3
                          V1*V2*V3 --- R*V1*V2*V3
dims 1 4 6 4 1
";

fn criterion_1() -> Outcome {
    let (out, elapsed) = run_bin(&["cohomology", "--n", "4"])?;
    ensure(out.status.success(), || format!("exit status {}", out.status))?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(text == K4_TABLE, || format!("table differs:\n{text}"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;

    // basis by hand, degree by degree
    let expected: Vec<Vec<(bool, Vec<usize>)>> = vec![
        vec![(false, vec![])],
        vec![(true, vec![]), (false, vec![1]), (false, vec![2]), (false, vec![3])],
        vec![
            (true, vec![1]),
            (true, vec![2]),
            (true, vec![3]),
            (false, vec![1, 2]),
            (false, vec![1, 3]),
            (false, vec![2, 3]),
        ],
        vec![(true, vec![1, 2]), (true, vec![1, 3]), (true, vec![2, 3]), (false, vec![1, 2, 3])],
        vec![(true, vec![1, 2, 3])],
    ];
    let dims: Vec<usize> = expected.iter().map(Vec::len).collect();
    ensure(dims == [1, 4, 6, 4, 1], || format!("hand basis dims {dims:?}"))?;
    let mut nonzero = Vec::new();
    for (d, want) in expected.iter().enumerate() {
        let got: BTreeSet<(bool, Vec<usize>)> =
            lib(basis(4, d))?.iter().map(|m| (m.eps(), m.vars())).collect();
        let want: BTreeSet<_> = want.iter().cloned().collect();
        ensure(got == want, || format!("degree {d}: basis {got:?}"))?;
        for (eps, vars) in &want {
            let m = mono(4, *eps, vars);
            let s = lib(CohomologyClass::from(m).sq(1))?;
            if !s.is_zero() {
                nonzero.push((m, s));
            }
        }
    }
    // Sq1 V_i = V_i^2 = R V_i, and the Cartan formula kills it on V_i V_j
    let links = [
        (mono(4, false, &[1]), mono(4, true, &[1])),
        (mono(4, false, &[2]), mono(4, true, &[2])),
        (mono(4, false, &[3]), mono(4, true, &[3])),
        (mono(4, false, &[1, 2, 3]), mono(4, true, &[1, 2, 3])),
    ];
    ensure(nonzero.len() == links.len(), || format!("{} nonzero Sq1 values", nonzero.len()))?;
    for ((m, s), (a, b)) in nonzero.iter().zip(&links) {
        ensure(m == a && *s == CohomologyClass::from(*b), || format!("Sq1 {m} = {s}"))?;
    }
    Ok(format!("16 basis elements, dims 1 4 6 4 1, 4 Sq1 links, table text exact, {elapsed:.2?}"))
}

/// Product in Z2[R, V_1..V_{n-1}] followed by the rewriting R^2 -> 0,
/// V_i^2 -> R V_i until no exponent exceeds one.
fn polynomial_product(n: usize, a: &Monomial, b: &Monomial) -> BTreeSet<Vec<u32>> {
    let exps = |m: &Monomial| {
        let mut e = vec![0u32; n];
        e[0] = m.eps() as u32;
        for v in m.vars() {
            e[v] = 1;
        }
        e
    };
    let (ea, eb) = (exps(a), exps(b));
    let mut pending: Vec<Vec<u32>> = vec![ea.iter().zip(&eb).map(|(x, y)| x + y).collect()];
    let mut result = BTreeSet::new();
    while let Some(e) = pending.pop() {
        if e[0] >= 2 {
            continue;
        }
        if let Some(i) = (1..n).find(|&i| e[i] >= 2) {
            let mut next = e.clone();
            next[i] -= 1;
            next[0] += 1;
            pending.push(next);
            continue;
        }
        if !result.remove(&e) {
            result.insert(e);
        }
    }
    result
}

fn random_class(n: usize, rng: &mut StdRng) -> CohomologyClass {
    let terms = (0..rng.gen_range(0..8)).map(|_| {
        let vars: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
        mono(n, rng.gen_bool(0.5), &vars)
    });
    CohomologyClass::from_terms(n, terms).unwrap()
}

fn criterion_2() -> Outcome {
    let mut pairs = 0;
    for n in 1..=4 {
        let all: Vec<Monomial> = (0..=n).flat_map(|d| basis(n, d).unwrap()).collect();
        for a in &all {
            for b in &all {
                let want = polynomial_product(n, a, b);
                let got: BTreeSet<Vec<u32>> = a
                    .cup(b)
                    .map(|m| {
                        let mut e = vec![0u32; n];
                        e[0] = m.eps() as u32;
                        for v in m.vars() {
                            e[v] = 1;
                        }
                        e
                    })
                    .into_iter()
                    .collect();
                ensure(got == want, || format!("n={n}: {a} * {b}"))?;
                pairs += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let triples = 10_000;
    for n in 2..=8 {
        for _ in 0..triples {
            let (a, b, c) = (random_class(n, &mut rng), random_class(n, &mut rng), random_class(n, &mut rng));
            let ab = lib(a.cup(&b))?;
            ensure(ab == lib(b.cup(&a))?, || format!("n={n}: {a} and {b} do not commute"))?;
            let left = lib(ab.cup(&c))?;
            let right = lib(a.cup(&lib(b.cup(&c))?))?;
            ensure(left == right, || format!("n={n}: ({a})({b})({c}) not associative"))?;
        }
    }
    Ok(format!("{pairs} basis pairs match the polynomial oracle; {triples} random triples for each 2 <= n <= 8"))
}

fn criterion_3() -> Outcome {
    for n in 1..=10 {
        let cl = lib(cup_length(n))?;
        ensure(cl.length == n, || format!("n={n}: cup length {}", cl.length))?;
        for d in 0..=n {
            ensure(lib(duality_pairing(n, d))?.is_nonsingular(), || format!("n={n}: degree {d} singular"))?;
        }
    }
    Ok("cup length n, pairing nonsingular in every degree, n <= 10".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=10 {
        let wu = lib(klein_core::char_classes::wu_classes(n))?;
        // defining property of the Wu classes, checked against every class of the complementary degree
        for (j, v) in wu.iter().enumerate() {
            for x in lib(basis(n, n - j))? {
                let x = CohomologyClass::from(x);
                let lhs = lib(v.cup(&x))?.top_coefficient();
                let rhs = lib(x.sq(j))?.top_coefficient();
                ensure(lhs == rhs, || format!("n={n}: v_{j} fails on {x}"))?;
            }
        }
        let w = lib(stiefel_whitney(n))?;
        ensure(w.len() == n + 1, || format!("n={n}: {} classes", w.len()))?;
        ensure(w[0] == lib(CohomologyClass::one(n))?, || format!("n={n}: w_0 = {}", w[0]))?;
        for (k, wk) in w.iter().enumerate().skip(1) {
            let want = if k == 1 && n % 2 == 0 {
                CohomologyClass::from(lib(Monomial::r(n))?)
            } else {
                lib(CohomologyClass::zero(n))?
            };
            ensure(*wk == want, || format!("n={n}: w_{k} = {wk}"))?;
        }
    }
    Ok("w_1 = R for even n, all other w_k (k >= 1) vanish, n <= 10; Wu classes satisfy v_j x = Sq^j x".into())
}

fn criterion_5() -> Outcome {
    for n in 2..=12 {
        let report = lib(consistency_check(n))?;
        if let Some(bad) = report.failures().next() {
            return Err(format!("n={n}: {} ({})", bad.name, bad.detail));
        }
        // universal coefficients by hand: dim H^d(Z2) = rank + #Z2 in H^d + #Z2 in H^{d+1}
        let coh = lib(integral_cohomology(n))?;
        let betti = lib(poincare_polynomial(n))?;
        for d in 0..=n {
            let tors = |g: Option<&AbelianGroup>| g.map_or(0, |g| g.torsion.iter().filter(|&&t| t % 2 == 0).count());
            let dim = coh[d].free_rank as usize + tors(coh.get(d)) + tors(coh.get(d + 1));
            ensure(dim as u64 == betti[d], || format!("n={n}: degree {d} gives {dim}, Z2 Betti {}", betti[d]))?;
        }
    }
    let coh = lib(integral_cohomology(2))?;
    let want = vec![AbelianGroup::free(1), AbelianGroup::free(1), AbelianGroup::with_z2(0, 1)];
    ensure(coh == want, || format!("H^*(K_2; Z) = {coh:?}"))?;
    let h1 = &lib(homology_from_splitting(2))?[1];
    ensure(*h1 == AbelianGroup::with_z2(1, 1), || format!("H_1(K_2) = {h1:?}"))?;
    Ok("consistency identities and UCT dimensions hold for 2 <= n <= 12; K_2: H^* = Z, Z, Z2 and H_1 = Z + Z2".into())
}

fn criterion_6() -> Outcome {
    for n in 3..=8 {
        let w = lib(long_product_witness(n))?;
        ensure(!w.product.is_zero(), || format!("n={n}: witness vanishes"))?;
        let left: Vec<usize> = (1..=n - 2).collect();
        let (l, r) = (mono(n, true, &left), mono(n, true, &[1, n - 1]));
        ensure(w.product.contains(&l, &r), || format!("n={n}: term {l}(x){r} missing"))?;
        ensure(w.factors.len() == n + 2, || format!("n={n}: {} factors", w.factors.len()))?;
    }
    let mut cases = 0;
    for n in 3..=6 {
        let s = lib(zcl_exhaustive(n, n + 3))?;
        ensure(s.all_zero, || format!("n={n}: nonzero product {:?}", s.witness))?;
        cases += s.cases;
    }
    let tc = lib(tc_bounds(4))?;
    // with n = 7: K_{n-3} = K_4, TC >= n = 7 and 2n - 5 = 9
    ensure((tc.lower, tc.upper) == (7, 9), || format!("tc(4) = ({}, {})", tc.lower, tc.upper))?;
    Ok(format!("witness nonzero with certificate for 3 <= n <= 8; {cases} products of length n+3 vanish for 3 <= n <= 6; TC(K_4) in [7, 9]"))
}

/// `pi_1` acting on `R^{n-1} x R`: `a_j` translates by `e_j`, `a_n` is
/// `(x, y) -> (-x, y + 1)`. Stored as `(sign, shift, lift)`; a word acts as
/// the composite of its letters, leftmost outermost.
#[derive(Clone, PartialEq, Debug)]
struct Affine {
    sign: i64,
    shift: Vec<i64>,
    lift: i64,
}

impl Affine {
    fn identity(n: usize) -> Self {
        Affine { sign: 1, shift: vec![0; n - 1], lift: 0 }
    }

    fn then_inner(&self, g: &Affine) -> Affine {
        Affine {
            sign: self.sign * g.sign,
            shift: self.shift.iter().zip(&g.shift).map(|(b, c)| b + self.sign * c).collect(),
            lift: self.lift + g.lift,
        }
    }

    fn letter(n: usize, l: Letter) -> Affine {
        let mut a = Affine::identity(n);
        let step = if l.inverse { -1 } else { 1 };
        if l.gen == n {
            a.sign = -1;
            a.lift = step;
        } else {
            a.shift[l.gen - 1] = step;
        }
        a
    }

    fn of_word(n: usize, letters: &[Letter]) -> Affine {
        letters.iter().fold(Affine::identity(n), |acc, &l| acc.then_inner(&Affine::letter(n, l)))
    }

    /// The element `a_1^{k_1} .. a_{n-1}^{k_{n-1}} a_n^m` with this action.
    fn normal_form(&self, n: usize) -> NormalForm {
        NormalForm::from_i64(n, &self.shift, self.lift).unwrap()
    }
}

fn criterion_7() -> Outcome {
    for n in 1..=10 {
        for r in lib(relators(n))? {
            ensure(reduce(&r).is_identity(), || format!("n={n}: relator {r:?} is not trivial"))?;
        }
        let ab = lib(abelianization(n))?;
        if n >= 2 {
            let h1 = lib(homology_from_splitting(n))?[1].clone();
            ensure(ab == h1, || format!("n={n}: abelianization {ab:?} but H_1 {h1:?}"))?;
        }
        // a_n free, each a_j (j < n) of order two after abelianizing
        ensure(ab == AbelianGroup::with_z2(1, n as u64 - 1), || format!("n={n}: abelianization {ab:?}"))?;
    }
    let mut words = 0u64;
    for n in 1..=4 {
        let alphabet: Vec<Letter> =
            (1..=n).flat_map(|gen| [false, true].map(|inverse| Letter { gen, inverse })).collect();
        let mut layer: Vec<Vec<Letter>> = vec![vec![]];
        for _ in 0..=6 {
            for w in &layer {
                let word = lib(GroupWord::new(n, w.clone()))?;
                let got = reduce(&word);
                let want = Affine::of_word(n, w).normal_form(n);
                ensure(got == want, || format!("n={n}: {w:?} reduces to {got:?}, action gives {want:?}"))?;
                let rewritten = lib(rewrite_normal_form(&word))?;
                ensure(got == rewritten, || format!("n={n}: {w:?} rewrites to {rewritten:?}"))?;
                words += 1;
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&l| {
                        let mut next = w.clone();
                        next.push(l);
                        next
                    })
                })
                .collect();
        }
    }
    Ok(format!("relators trivial and abelianization = H_1 = Z + Z2^(n-1) for n <= 10; {words} words of length <= 6 agree with rewriting and with a faithful affine action"))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut worst: f64 = 0.0;
    for n in 2..=4 {
        for _ in 0..10_000 {
            let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(0.0..TAU)).collect();
            let neg: Vec<f64> = th.iter().map(|x| -x).collect();
            let a = lib(immersion_point(n, &th, 0.0))?;
            let b = lib(immersion_point(n, &neg, PI))?;
            worst = worst.max(a.iter().zip(&b).map(|(x, y)| (x + y).powi(2)).sum::<f64>().sqrt());
            let a = lib(embedding_point(n, &th, 0.0))?;
            let b = lib(embedding_point(n, &neg, PI))?;
            worst = worst.max(a.iter().zip(&b).map(|(x, y)| (x + y).powi(2)).sum::<f64>().sqrt());
        }
    }
    ensure(worst < 1e-9, || format!("boundary identity defect {worst:e}"))?;

    for n in 2..=12 {
        let d = 2.0 / (PI * PI * (2f64.powi(n as i32 + 1) - 5.0));
        let (lo, hi) = (0.5 - PI * PI * d / 4.0, 0.5 + PI * PI * d / 4.0);
        for k in 0..=10_000 {
            let t = PI * k as f64 / 10_000.0;
            let r = lib(radius(n, t))?;
            ensure(lo - 1e-15 <= r && r <= hi + 1e-15, || format!("n={n}: r({t}) = {r} outside [{lo}, {hi}]"))?;
        }
    }

    for n in 2..=8 {
        let p = lib(TorusParams::standard(n))?;
        for _ in 0..2_000 {
            let th: Vec<f64> = (0..n - 1).map(|_| rng.gen_range(-TAU..TAU)).collect();
            let neg: Vec<f64> = th.iter().map(|x| -x).collect();
            let (a, b) = (lib(torus_point(&p, &th))?, lib(torus_point(&p, &neg))?);
            ensure((a[0] - b[0]).abs() < 1e-9, || format!("n={n}: x_1 not even at {th:?}"))?;
            for i in 1..n {
                ensure((a[i] + b[i]).abs() < 1e-9, || format!("n={n}: x_{} not odd at {th:?}", i + 1))?;
            }
        }
    }

    for n in 2..=10 {
        let big_d = 1.0 / (2f64.powi(n as i32 + 1) - 5.0);
        let (lo, hi) = ((2f64.powi(n as i32) - 3.0) * big_d, (2f64.powi(n as i32) - 2.0) * big_d);
        let (mut min_x, mut max_x) = (f64::MAX, f64::MIN);
        for k in 0..=1_000 {
            let s = 0.5 - big_d / 2.0 + big_d * k as f64 / 1_000.0;
            let mut radii: Vec<f64> = (1..=n - 2).map(|i| 2f64.powi((n - i) as i32) * big_d).collect();
            radii.push(s - 0.5 + 1.5 * big_d);
            let x = lib(torus_point(&lib(TorusParams::new(radii))?, &vec![0.0; n - 1]))?[0];
            ensure((x - s).abs() < 1e-9, || format!("n={n}: maximum x {x} differs from s = {s}"))?;
            min_x = min_x.min(x);
            max_x = max_x.max(x);
        }
        ensure((min_x - lo).abs() < 1e-9 && (max_x - hi).abs() < 1e-9, || {
            format!("n={n}: maximum x spans [{min_x}, {max_x}], expected [{lo}, {hi}]")
        })?;
        let p = lib(ImmersionParams::new(n))?;
        for k in 0..=100 {
            let t = PI * k as f64 / 100.0;
            let sum: f64 = p.torus_radii(t).iter().sum();
            ensure((sum - p.radius(t)).abs() < 1e-9, || format!("n={n}: radii at t={t} sum to {sum}"))?;
        }
    }

    let res = Resolution { theta: 200, t: 400 };
    let imm = lib(build_mesh(2, Target::Immersion, res))?;
    let emb = lib(build_mesh(2, Target::Embedding, res))?;
    let ri = lib(self_intersection_scan(&imm, ScanOptions::new(1e-2)))?;
    let re = lib(self_intersection_scan(&emb, ScanOptions::new(1e-2)))?;
    ensure(re.is_empty(), || format!("embedding scan found {} pairs", re.collision_count))?;
    ensure(!ri.is_empty(), || "immersion scan found no pairs".into())?;
    let t_of = |p: &Option<Vec<f64>>| p.as_ref().and_then(|v| v.last().copied()).unwrap_or(f64::NAN);
    let mut reach: f64 = 0.0;
    for c in &ri.collisions {
        let (ta, tb) = (t_of(&c.params_a), t_of(&c.params_b));
        ensure((ta - PI / 2.0) * (tb - PI / 2.0) < 0.0, || format!("pair at t = {ta}, {tb} on one sheet"))?;
        reach = reach.max(ta.min(PI - ta)).max(tb.min(PI - tb));
    }
    let summary = format!(
        "weld defect {worst:.1e}; radius band, symmetry, max-x range ok; embedding scan empty; immersion scan {} pairs; reach max min(t, pi - t) = {reach:.4}",
        ri.collision_count
    );
    ensure(reach < 0.4, || format!("{summary} is not below 0.4"))?;
    Ok(summary)
}

fn criterion_9() -> Outcome {
    let cases = [
        ("1,1,1,1,1,4", vec![vec![6]]),
        ("0,0,0,1,1,1", vec![vec![6, 3, 2, 1]]),
        ("0,0,1,1,1,2", vec![vec![6, 2, 1]]),
    ];
    let mut shown = Vec::new();
    for (lengths, genes) in &cases {
        let code = lib(genetic_code(&lib(LengthVector::parse(lengths, None))?))?;
        ensure(code.genes == *genes, || format!("({lengths}) gives {code}"))?;
        shown.push(code.to_string());
    }
    let code = lib(genetic_code(&lib(LengthVector::parse("0,0,1,1,1,2", None))?))?;
    let c = lib(classify(&code))?;
    ensure(c.klein_m == Some(3), || format!("{code} classified as {c:?}"))?;
    Ok(format!("codes {} reproduced; {code} classified as K_3", shown.join(", ")))
}

fn criterion_10() -> Outcome {
    let started = Instant::now();
    let (first, _) = run_bin(&["verify-paper", "--max-n", "8"])?;
    let (second, _) = run_bin(&["verify-paper", "--max-n", "8"])?;
    let elapsed = started.elapsed() / 2;
    let text = String::from_utf8_lossy(&first.stdout).into_owned();
    ensure(first.stdout == second.stdout, || "two runs printed different output".into())?;
    ensure(first.status.code() == second.status.code(), || "two runs exited differently".into())?;
    ensure(elapsed < Duration::from_secs(300), || format!("run took {elapsed:?}"))?;
    let lines: BTreeMap<&str, bool> = text
        .lines()
        .filter_map(|l| {
            let (status, rest) = l.split_once(' ')?;
            let id = rest.split_once(':')?.0;
            matches!(status, "PASS" | "FAIL").then_some((id, status == "PASS"))
        })
        .collect();
    ensure(lines.len() == 18, || format!("{} checks reported:\n{text}", lines.len()))?;
    let failed: Vec<&str> = lines.iter().filter(|(_, ok)| !**ok).map(|(id, _)| *id).collect();
    // the run itself is judged on completeness, determinism and time; failing
    // checks are reported here and judged under their own criterion
    ensure(
        failed.iter().all(|id| *id == "immersion-self-intersection-reach"),
        || format!("failing checks {failed:?}"),
    )?;
    Ok(format!(
        "18 checks, identical output on two runs, {elapsed:.2?} per run, exit {:?}; failing: {}",
        first.status.code(),
        if failed.is_empty() { "none".into() } else { failed.join(", ") }
    ))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let budgets = [1, 30, 30, 10, 10, 180, 60, 120, 1, 300];
    let mut failed = 0;
    for ((id, check), budget) in criteria.into_iter().zip(budgets) {
        let started = Instant::now();
        let outcome = check();
        let elapsed = started.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= Duration::from_secs(budget) {
                Ok(detail)
            } else {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget} s"))
            }
        });
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS ({elapsed:.2?}) {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id}: FAIL ({elapsed:.2?}) {detail}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

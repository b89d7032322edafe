use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use klein_core::char_classes::{manifold_report, wu_data};
use klein_core::cohomology::{basis, poincare_polynomial, CohomologyClass};
use klein_core::geometry::{
    build_mesh, read_mesh, self_intersection_scan, write_kmesh, write_obj, MeshFormat,
    Resolution, ScanOptions, Target,
};
use klein_core::integral::{
    consistency_check, homology_from_splitting, integral_cohomology, splitting,
};
use klein_core::pi1::{abelianization, reduce, relators, GroupWord, NormalForm};
use klein_core::polygon::{classify, gees, genetic_code, is_generic, parse_rational, LengthVector};
use klein_core::tensor::{long_product_witness, tc_bounds, zcl_exhaustive};
use klein_core::verify::{cohomology_table, verify, SCHEMA};
use klein_core::Error;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

/// Exact cohomology, homotopy and geometry of n-dimensional Klein bottles.
#[derive(Parser)]
#[command(name = "klein-forge", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Dim {
    /// Dimension of the Klein bottle K_n.
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Mod-2 cohomology ring: basis table with Sq^1 links, products, squares.
    Cohomology {
        #[command(flatten)]
        dim: Dim,
        /// Print the basis table (the default when no operation is given).
        #[arg(long)]
        table: bool,
        /// Cup product of two classes, e.g. --cup "V1 + R" "V2".
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        cup: Option<Vec<String>>,
        /// Steenrod square Sq^J of a class, e.g. --sq 1 "V1*V2*V3".
        #[arg(long, num_args = 2, value_names = ["J", "X"])]
        sq: Option<Vec<String>>,
    },
    /// Wu and Stiefel-Whitney classes with the derived manifold invariants.
    Manifold(Dim),
    /// Integral cohomology groups by degree.
    Integral(Dim),
    /// Wedge decomposition of the suspension and the homology it gives.
    Splitting(Dim),
    /// Cross-check integral cohomology, the splitting, mod-2 ranks and H_1.
    Check(Dim),
    /// Fundamental group: normal forms, relators, abelianization.
    Pi1 {
        #[command(flatten)]
        dim: Dim,
        /// Word to reduce, e.g. "an a1 an^-1 a2^3".
        #[arg(long)]
        word: Option<String>,
        /// List the defining relators and their normal forms.
        #[arg(long)]
        relators: bool,
    },
    /// Products of zero divisors in H^*(K_n x K_n; Z2).
    Zcl {
        #[command(flatten)]
        dim: Dim,
        /// Search every product of this many zero divisors.
        #[arg(long)]
        len: Option<usize>,
        /// Show the long nonzero product with its certificate term.
        #[arg(long)]
        witness: bool,
    },
    /// Topological complexity bounds for K_m.
    Tc {
        #[arg(long)]
        m: usize,
    },
    /// Genetic code of a planar polygon space.
    Genes {
        /// Side lengths, comma separated; integers, a/b or decimals; 0 allowed.
        #[arg(long, allow_hyphen_values = true)]
        lengths: String,
        /// Value substituted for zero lengths.
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Sample the immersion or embedding and write a mesh file.
    Mesh {
        #[command(flatten)]
        dim: Dim,
        /// immersion (R^{n+1}) or embedding (R^{n+2}).
        #[arg(long, default_value = "immersion")]
        target: Target,
        /// Angle samples x t samples, e.g. 200x400.
        #[arg(long, default_value = "200x400")]
        res: Resolution,
        /// Output path: .obj (3 coordinates) or .kmesh (any dimension).
        #[arg(long)]
        out: PathBuf,
        /// Write an OBJ of these three coordinates (1-based), e.g. 1,2,4.
        #[arg(long)]
        project: Option<String>,
    },
    /// Look for close pairs of non-neighbouring vertices in a mesh file.
    Scan {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0.01)]
        radius: f64,
        /// Neighbourhood size in face steps (default depends on edge length).
        #[arg(long)]
        hops: Option<usize>,
        /// Collisions listed in the output (all are counted).
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Run every check and report.
    #[command(alias = "verify-paper")]
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

enum Failure {
    Check(String),
    Core(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn big(x: &num_bigint::BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn normal_form_json(x: &NormalForm) -> Value {
    json!({
        "text": x.to_string(),
        "k": x.k.iter().map(big).collect::<Vec<_>>(),
        "m": big(&x.m),
    })
}

struct Out {
    json: bool,
    w: BufWriter<io::Stdout>,
}

impl Out {
    fn emit(&mut self, command: &str, value: Value, text: impl FnOnce() -> String) -> io::Result<()> {
        if self.json {
            let mut obj = json!({ "schema": SCHEMA, "command": command });
            if let (Value::Object(o), Value::Object(v)) = (&mut obj, value) {
                o.extend(v);
            }
            writeln!(self.w, "{}", serde_json::to_string_pretty(&obj).expect("serializable"))
        } else {
            write!(self.w, "{}", text())
        }
    }
}

fn run(cli: Cli, out: &mut Out) -> Outcome {
    match cli.command {
        Command::Cohomology { dim, table: _, cup, sq } => cohomology(dim.n, cup, sq, out),
        Command::Manifold(Dim { n }) => {
            let report = manifold_report(n)?;
            let wu = wu_data(n)?;
            let text = || {
                let mut s = format!("K_{n}\n");
                for (j, v) in wu.wu.iter().enumerate() {
                    s += &format!("  v_{j} = {v}\n");
                }
                for (j, w) in wu.sw.iter().enumerate() {
                    s += &format!("  w_{j} = {w}\n");
                }
                let f = |name: &str, v: String, p: &klein_core::char_classes::Provenance| {
                    format!("  {name:<15} {v:<6} ({})\n", serde_json::to_value(p).unwrap().as_str().unwrap())
                };
                s += &f("orientable", report.orientable.value.to_string(), &report.orientable.provenance);
                s += &f("span", report.span.value.to_string(), &report.span.provenance);
                s += &f("immersion dim", report.immersion_dim.value.to_string(), &report.immersion_dim.provenance);
                s += &f("embedding dim", report.embedding_dim.value.to_string(), &report.embedding_dim.provenance);
                s += &f("parallelizable", report.parallelizable.value.to_string(), &report.parallelizable.provenance);
                s += &f("cat", report.cat.value.to_string(), &report.cat.provenance);
                s
            };
            let value = json!({ "n": n, "report": report, "wu": wu.wu, "sw": wu.sw });
            out.emit("manifold", value, text)?;
            Ok(())
        }
        Command::Integral(Dim { n }) => {
            let groups = integral_cohomology(n)?;
            let text = || {
                groups
                    .iter()
                    .enumerate()
                    .map(|(d, g)| format!("H^{d}(K_{n}; Z) = {g}\n"))
                    .collect()
            };
            let value = json!({
                "n": n,
                "groups": groups,
                "text": groups.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            out.emit("integral", value, text)?;
            Ok(())
        }
        Command::Splitting(Dim { n }) => {
            let summands = splitting(n)?;
            let homology = homology_from_splitting(n)?;
            let wedge: Vec<String> = summands.iter().map(ToString::to_string).collect();
            let text = || {
                let mut s = format!("Sigma K_{n} = {}\n", wedge.join(" v "));
                for (d, g) in homology.iter().enumerate() {
                    s += &format!("H_{d}(K_{n}; Z) = {g}\n");
                }
                s
            };
            let value = json!({ "n": n, "summands": summands, "wedge": wedge, "homology": homology });
            out.emit("splitting", value, text)?;
            Ok(())
        }
        Command::Check(Dim { n }) => {
            let report = consistency_check(n)?;
            let text = || {
                report
                    .checks
                    .iter()
                    .map(|c| {
                        format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)
                    })
                    .collect()
            };
            out.emit("check", json!({ "n": n, "passed": report.all_passed(), "report": report }), text)?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Check(format!("consistency check failed for n = {n}")))
            }
        }
        Command::Pi1 { dim, word, relators: show } => pi1(dim.n, word, show, out),
        Command::Zcl { dim, len, witness } => zcl(dim.n, len, witness, out),
        Command::Tc { m } => {
            let tc = tc_bounds(m)?;
            let text = || {
                format!(
                    "K_{m}: zero-divisor cup length {} ({}), {} <= TC <= {}\n",
                    tc.zcl, format!("{:?}", tc.zcl_source).to_lowercase(), tc.lower, tc.upper
                )
            };
            out.emit("tc", json!({ "bounds": tc }), text)?;
            Ok(())
        }
        Command::Genes { lengths, epsilon } => {
            let eps = epsilon.map(|e| parse_rational(e.trim())).transpose()?;
            let l = LengthVector::parse(&lengths, eps)?;
            let generic = is_generic(&l);
            let code = genetic_code(&l)?;
            let class = classify(&code)?;
            let gee_sets = gees(&code);
            let sorted: Vec<String> = l.lengths().iter().map(ToString::to_string).collect();
            let text = || {
                let mut s = format!("lengths {}\n", sorted.join(","));
                if let Some(e) = l.epsilon() {
                    s += &format!("epsilon {e}\n");
                }
                s += &format!("code {code}\n");
                if class.rp {
                    s += &format!("space RP^{}\n", code.n - 3);
                }
                if class.torus {
                    s += &format!("space T^{}\n", code.n - 3);
                }
                if let Some(m) = class.klein_m {
                    s += &format!("space K_{m}\n");
                }
                if let Some(tc) = &class.tc {
                    s += &format!("TC bounds {} <= TC <= {}\n", tc.lower, tc.upper);
                }
                s
            };
            let value = json!({
                "lengths": sorted,
                "epsilon": l.epsilon().map(ToString::to_string),
                "generic": generic,
                "code": code,
                "text": code.to_string(),
                "gees": gee_sets,
                "classification": class,
            });
            out.emit("genes", value, text)?;
            Ok(())
        }
        Command::Mesh { dim, target, res, out: path, project } => {
            let started = Instant::now();
            let mesh = build_mesh(dim.n, target, res)?;
            let projection = project.map(|p| parse_projection(&p)).transpose()?;
            let format = MeshFormat::from_path(&path)?;
            let mut file = BufWriter::new(File::create(&path)?);
            match format {
                MeshFormat::Obj => write_obj(&mesh, &mut file, projection)?,
                MeshFormat::Kmesh => write_kmesh(&mesh, &mut file)?,
            }
            file.flush()?;
            eprintln!("mesh written in {:.2?}", started.elapsed());
            let value = json!({
                "n": dim.n,
                "target": target,
                "res": res.to_string(),
                "dim": mesh.dim(),
                "vertices": mesh.vertex_count(),
                "faces": mesh.faces().len(),
                "weld_residual": mesh.weld_residual,
                "out": path.display().to_string(),
            });
            let text = || {
                format!(
                    "K_{} {target} at {res}: {} vertices in R^{}, {} faces, weld residual {:.1e} -> {}\n",
                    dim.n,
                    mesh.vertex_count(),
                    mesh.dim(),
                    mesh.faces().len(),
                    mesh.weld_residual.unwrap_or(0.0),
                    path.display()
                )
            };
            out.emit("mesh", value, text)?;
            Ok(())
        }
        Command::Scan { input, radius, hops, limit } => {
            let started = Instant::now();
            let mesh = read_mesh(&input)?;
            let mut report = self_intersection_scan(&mesh, ScanOptions { radius, exclude_hops: hops })?;
            eprintln!("scan finished in {:.2?}", started.elapsed());
            report.collisions.truncate(limit);
            let text = || {
                let mut s = format!(
                    "{} vertices in R^{}, radius {}, neighbourhood {} steps: {} close pairs\n",
                    report.vertex_count, report.dim, report.radius, report.exclude_hops, report.collision_count
                );
                if let Some(b) = report.max_boundary_distance {
                    s += &format!("largest min(t, pi - t): {b:.4}\n");
                }
                for c in &report.collisions {
                    s += &format!("  {} {} distance {:.3e}\n", c.a, c.b, c.distance);
                }
                s
            };
            out.emit("scan", json!({ "report": report }), text)?;
            Ok(())
        }
        Command::Verify { max_n } => {
            let started = Instant::now();
            let report = verify(max_n)?;
            eprintln!("verification finished in {:.2?}", started.elapsed());
            let text = || {
                let mut s: String = report
                    .checks
                    .iter()
                    .map(|c| format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.id, c.detail))
                    .collect();
                let failed = report.failures().count();
                s += &format!("{} checks, {failed} failed\n", report.checks.len());
                s
            };
            out.emit("verify", json!({ "report": report }), text)?;
            match report.failures().map(|c| c.id).collect::<Vec<_>>() {
                f if f.is_empty() => Ok(()),
                f => Err(Failure::Check(format!("failed checks: {}", f.join(", ")))),
            }
        }
    }
}

fn parse_projection(text: &str) -> Result<[usize; 3], Error> {
    let bad = || Error::Parse(format!("projection must be three 1-based indices like 1,2,3, got {text:?}"));
    let idx: Vec<usize> = text
        .split(',')
        .map(|t| t.trim().parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    idx.try_into().map_err(|_| bad())
}

fn cohomology(n: usize, cup: Option<Vec<String>>, sq: Option<Vec<String>>, out: &mut Out) -> Outcome {
    if let Some(args) = cup {
        let a = CohomologyClass::parse(n, &args[0])?;
        let b = CohomologyClass::parse(n, &args[1])?;
        let p = a.cup(&b)?;
        let value = json!({ "n": n, "a": a, "b": b, "product": p, "text": p.to_string() });
        out.emit("cohomology", value, || format!("({a}) * ({b}) = {p}\n"))?;
        return Ok(());
    }
    if let Some(args) = sq {
        let j: usize = args[0]
            .parse()
            .map_err(|_| Error::Parse(format!("square index must be a number, got {:?}", args[0])))?;
        let x = CohomologyClass::parse(n, &args[1])?;
        let y = x.sq(j)?;
        let value = json!({ "n": n, "j": j, "x": x, "square": y, "text": y.to_string() });
        out.emit("cohomology", value, || format!("Sq^{j}({x}) = {y}\n"))?;
        return Ok(());
    }
    let table = cohomology_table(n)?;
    let dims = poincare_polynomial(n)?;
    let by_degree = (0..=n)
        .map(|d| basis(n, d))
        .collect::<Result<Vec<_>, _>>()?;
    let value = json!({
        "n": n,
        "dims": dims,
        "basis": by_degree,
        "basis_text": by_degree
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "sq1_links": table
            .rows
            .iter()
            .filter(|r| r.linked)
            .map(|r| [r.low.to_string(), r.high.to_string()])
            .collect::<Vec<_>>(),
    });
    out.emit("cohomology", value, || table.render())?;
    Ok(())
}

fn pi1(n: usize, word: Option<String>, show: bool, out: &mut Out) -> Outcome {
    let ab = abelianization(n)?;
    let mut value = json!({ "n": n, "abelianization": ab, "abelianization_text": ab.to_string() });
    let mut text = String::new();
    if let Some(w) = word {
        let w = GroupWord::parse(n, &w)?;
        let nf = reduce(&w);
        text += &format!("{w} = {nf}\n");
        value["word"] = json!(w.to_string());
        value["normal_form"] = normal_form_json(&nf);
    }
    if show {
        let rels = relators(n)?;
        let list: Vec<Value> = rels
            .iter()
            .map(|r| json!({ "word": r.to_string(), "reduces_to": normal_form_json(&reduce(r)) }))
            .collect();
        for r in &rels {
            text += &format!("relator {r} = {}\n", reduce(r));
        }
        value["relators"] = json!(list);
    }
    text += &format!("H_1 = pi_1^ab = {ab}\n");
    out.emit("pi1", value, || text)?;
    Ok(())
}

fn zcl(n: usize, len: Option<usize>, witness: bool, out: &mut Out) -> Outcome {
    let mut value = json!({ "n": n });
    let mut text = String::new();
    if witness {
        let w = long_product_witness(n)?;
        let (l, r) = &w.certificate;
        text += &format!(
            "{} has {} terms, including {l}(x){r}\n",
            w.factors,
            w.product.len()
        );
        value["witness"] = json!({
            "factors": w.factors.to_string(),
            "length": w.factors.len(),
            "terms": w.product.len(),
            "certificate": [l.to_string(), r.to_string()],
            "product": w.product,
        });
    }
    if let Some(len) = len {
        let s = zcl_exhaustive(n, len)?;
        text += &match &s.witness {
            Some(f) => format!("products of {len} zero divisors: nonzero, e.g. {f} ({} cases)\n", s.cases),
            None => format!("products of {len} zero divisors: all zero ({} cases)\n", s.cases),
        };
        value["search"] = json!({
            "len": len,
            "all_zero": s.all_zero,
            "cases": s.cases.to_string(),
            "witness": s.witness.as_ref().map(ToString::to_string),
        });
    }
    if !witness && len.is_none() {
        return Err(Error::Domain("zcl needs --len, --witness or both".into()).into());
    }
    out.emit("zcl", value, || text)?;
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible { .. } => 3,
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = Out {
        json: cli.json,
        w: BufWriter::new(io::stdout()),
    };
    let result = run(cli, &mut out);
    let flushed = out.w.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Check(msg)), _) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Core(e)), _) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        (Err(Failure::Io(e)), _) | (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

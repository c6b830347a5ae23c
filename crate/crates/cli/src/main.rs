use clap::{Args, Parser, Subcommand, ValueEnum};
use klr_core::cartan::{orbit_search, Weight};
use klr_core::klr::{verify_rep, zoo, KlrData, MatrixRep, RepJson};
use klr_core::path_algebra::catalog::by_name;
use klr_core::path_algebra::homological::Homological;
use klr_core::path_algebra::structure::*;
use klr_core::path_algebra::presentation::PresentationJson;
use klr_core::path_algebra::{normalize_with, FDAlgebra, Presentation};
use klr_core::rational::{fmt_q, is_nonzero, parse_q, Q};
use klr_core::reproduce::{self, tau_failures, tau_statements, LISTED_PAIRS};
use klr_core::string_ar::{StringAlgebra, StringWord};
use klr_core::tableaux::{content, dim_block, dim_full, dim_idempotent_hom, parse_word, partitions, word_to_string};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "klr-workbench", version, about = "Cyclotomic KLR algebras of affine type A: dimensions, modules, basic algebras")]
struct Cli {
    #[arg(long, value_enum, default_value = "md", global = true)]
    format: Format,
    /// Length horizon for normal-form computations.
    #[arg(long, env = "WORKBENCH_MAXLEN", default_value_t = 40, global = true)]
    horizon: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimensions of the full algebra, a block, or e(nu) R e(nu2).
    Dims {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long)]
        n: Option<usize>,
        /// Block as coefficients of the simple roots, e.g. 2,2.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        beta: Option<Vec<i64>>,
        /// Residue word, e.g. 0110.
        #[arg(long)]
        nu: Option<String>,
        #[arg(long)]
        nu2: Option<String>,
    },
    /// Writes a weight as w(Lambda_0) - k delta.
    Weyl {
        #[arg(long, default_value_t = 1)]
        ell: usize,
        /// Partition whose weight is searched.
        #[arg(long, value_delimiter = ',', conflicts_with = "alpha")]
        partition: Option<Vec<usize>>,
        /// Weight Lambda_0 + sum a_i alpha_i given by a_0,...,a_ell.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Option<Vec<i64>>,
        #[arg(long, default_value_t = 20)]
        depth: usize,
    },
    /// Checks the defining relations on a module.
    Verify {
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        zoo: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        #[command(flatten)]
        zoo_args: ZooArgs,
    },
    /// Exports zoo modules to JSON.
    Construct {
        /// Module name; all modules when omitted.
        #[arg(long)]
        zoo: Option<String>,
        #[command(flatten)]
        zoo_args: ZooArgs,
        /// Directory for one file per module; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural report on a basic algebra.
    Algebra {
        #[command(flatten)]
        src: AlgebraSource,
    },
    /// Strings, bands, translates and orthogonal stable bricks of a special biserial algebra.
    Strings {
        #[command(flatten)]
        src: AlgebraSource,
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
        #[arg(long)]
        bands: bool,
        #[arg(long)]
        tau: bool,
        #[arg(long)]
        sosb: bool,
    },
    /// Runs every reproduction check.
    Report {
        /// Nonzero parameter for the generic checks.
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Criterion numbers or topics, comma separated.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct ZooArgs {
    #[arg(long, default_value = "1")]
    lambda: String,
    #[arg(long, default_value_t = 1)]
    ell: usize,
    /// Index of L_i or S_i.
    #[arg(long, default_value_t = 0)]
    i: usize,
}

#[derive(Args)]
struct AlgebraSource {
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    catalog: Option<String>,
    /// Presentation in JSON.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    exps: Vec<usize>,
    #[arg(long, default_value = "1")]
    lambda: String,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

struct Output {
    title: String,
    passed: bool,
    json: Value,
    rows: Vec<[String; 2]>,
}

impl Output {
    fn new(title: impl Into<String>, json: Value) -> Self {
        Output { title: title.into(), passed: true, json, rows: Vec::new() }
    }

    fn row(&mut self, k: impl Into<String>, v: impl ToString) {
        self.rows.push([k.into(), v.to_string()]);
    }

    fn render(&self, f: Format) -> String {
        match f {
            Format::Json => serde_json::to_string_pretty(&self.json).unwrap() + "\n",
            Format::Md => {
                let mut s = format!("## {}\n\n| item | value |\n|---|---|\n", self.title);
                for [k, v] in &self.rows {
                    s += &format!("| {} | {} |\n", k, v.replace('|', "\\|"));
                }
                s
            }
            Format::Csv => {
                let quote = |x: &str| format!("\"{}\"", x.replace('"', "\"\""));
                let mut s = String::from("item,value\n");
                for [k, v] in &self.rows {
                    s += &format!("{},{}\n", quote(k), quote(v));
                }
                s
            }
        }
    }
}

fn lambda(s: &str) -> Res<Q> {
    Ok(parse_q(s)?)
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn dims(ell: usize, n: Option<usize>, beta: Option<Vec<i64>>, nu: Option<String>, nu2: Option<String>) -> Res<Output> {
    if let Some(nu) = nu {
        let a = parse_word(&nu)?;
        let b = match &nu2 {
            Some(s) => parse_word(s)?,
            None => a.clone(),
        };
        let d = dim_idempotent_hom(ell, &a, &b)?;
        let mut o = Output::new(
            format!("dim e({}) R e({})", word_to_string(&a), word_to_string(&b)),
            json!({"ell": ell, "nu": word_to_string(&a), "nu2": word_to_string(&b), "dim": d.to_string()}),
        );
        o.row("dim", d);
        return Ok(o);
    }
    if let Some(beta) = beta {
        if beta.len() != ell + 1 || beta.iter().any(|&b| b < 0) {
            return Err(Failure::Usage(format!("--beta needs {} nonnegative coefficients", ell + 1)));
        }
        let d = dim_block(ell, &beta)?;
        let mut o = Output::new(format!("dim R({beta:?}), ell = {ell}"), json!({"ell": ell, "beta": beta, "dim": d.to_string()}));
        o.row("dim", d);
        return Ok(o);
    }
    let n = n.ok_or_else(|| Failure::Usage("dims needs one of --n, --beta, --nu".into()))?;
    let mut blocks: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for p in partitions(n) {
        *blocks.entry(content(ell, &p)).or_default() += 1;
    }
    let total = dim_full(ell, n)?;
    let mut o = Output::new(format!("blocks of R^Lambda0_{n}, ell = {ell}"), Value::Null);
    let mut list = Vec::new();
    for (beta, parts) in &blocks {
        let d = dim_block(ell, beta)?;
        o.row(format!("{beta:?} ({parts} partitions)"), d);
        list.push(json!({"beta": beta, "partitions": parts, "dim": d.to_string()}));
    }
    o.row("total", total);
    o.json = json!({"ell": ell, "n": n, "blocks": list, "total": total.to_string()});
    Ok(o)
}

fn weyl(ell: usize, partition: Option<Vec<usize>>, alpha: Option<Vec<i64>>, depth: usize) -> Res<Output> {
    let mu = match (partition, alpha) {
        (Some(p), _) => klr_core::tableaux::weight_of(ell, &p),
        (None, Some(a)) if a.len() == ell + 1 => Weight { level: 1, alpha: a },
        (None, Some(_)) => return Err(Failure::Usage(format!("--alpha needs {} coefficients", ell + 1))),
        (None, None) => return Err(Failure::Usage("weyl needs --partition or --alpha".into())),
    };
    let found = orbit_search(ell, &mu, depth)?;
    let terms: Vec<String> = mu.alpha.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, a)| format!("{a:+} alpha{i}")).collect();
    let mut o = Output::new(format!("Weyl orbit of {}Lambda0 {}", mu.level, terms.join(" ")).trim_end().to_string(), Value::Null);
    match &found {
        Some((w, k)) => {
            let word: Vec<String> = w.iter().map(|i| format!("s{i}")).collect();
            let word = if word.is_empty() { "1".to_string() } else { word.join(" ") };
            o.row("word", &word);
            o.row("k", k);
            o.json = json!({"weight": mu, "word": w, "k": k});
        }
        None => {
            o.row("result", format!("not of the form w(Lambda0) - k delta within depth {depth}"));
            o.json = json!({"weight": mu, "word": null});
        }
    }
    Ok(o)
}

fn build_zoo(name: &str, z: &ZooArgs) -> Res<MatrixRep> {
    Ok(zoo::build(name, z.ell, z.i, lambda(&z.lambda)?)?)
}

fn verify(name: Option<String>, file: Option<PathBuf>, z: &ZooArgs) -> Res<Output> {
    let (label, rep) = match (name, file) {
        (Some(n), _) => (n.clone(), build_zoo(&n, z)?),
        (None, Some(f)) => {
            let j: RepJson = serde_json::from_str(&std::fs::read_to_string(&f)?)?;
            (f.display().to_string(), MatrixRep::from_json(&j)?)
        }
        (None, None) => return Err(Failure::Usage("verify needs --zoo or --file".into())),
    };
    let report = verify_rep(&rep, &KlrData::new(rep.ell, rep.lambda.clone())?);
    let mut o = Output::new(format!("relations on {label}"), serde_json::to_value(&report)?);
    o.passed = report.passed;
    o.row("ell, n, lambda, dim", format!("{}, {}, {}, {}", rep.ell, rep.n, fmt_q(&rep.lambda), rep.dim));
    o.row("relations checked", report.relations_checked);
    o.row("result", mark(report.passed));
    for f in report.failures.iter().take(5) {
        o.row("failed relation", format!("{} on {}: residual {}", f.relation, f.witness, f.residual_text));
    }
    if report.failures.len() > 5 {
        o.row("further failures", report.failures.len() - 5);
    }
    Ok(o)
}

fn construct(name: Option<String>, z: &ZooArgs, out: Option<PathBuf>) -> Res<Output> {
    let mut names: Vec<String> = match name {
        Some(n) => vec![n],
        None if z.ell == 1 => zoo::ZOO_NAMES.iter().map(|s| s.to_string()).collect(),
        None => vec!["L".into(), "S".into()],
    };
    names.dedup();
    let mut all = serde_json::Map::new();
    let mut o = Output::new("exported modules", Value::Null);
    for n in &names {
        let indices: Vec<usize> = if (n == "L" || n == "S") && out.is_some() { (0..=z.ell).collect() } else { vec![z.i] };
        for i in indices {
            let args = ZooArgs { lambda: z.lambda.clone(), ell: z.ell, i };
            let rep = build_zoo(n, &args)?;
            let key = if n == "L" || n == "S" { format!("{n}{i}") } else { n.clone() };
            let value = serde_json::to_value(rep.to_json())?;
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!("{key}.json"));
                std::fs::write(&path, serde_json::to_string_pretty(&value)? + "\n")?;
                o.row(&key, path.display());
            } else {
                o.row(&key, format!("dim {}", rep.dim));
            }
            all.insert(key, value);
        }
    }
    o.json = Value::Object(all);
    Ok(o)
}

fn load_presentation(src: &AlgebraSource) -> Res<(String, Presentation)> {
    match (&src.catalog, &src.file) {
        (Some(name), _) => Ok((name.clone(), by_name(name, &src.exps, &lambda(&src.lambda)?)?)),
        (None, Some(f)) => {
            let j: PresentationJson = serde_json::from_str(&std::fs::read_to_string(f)?)?;
            Ok((f.display().to_string(), Presentation::from_json(&j)?))
        }
        (None, None) => Err(Failure::Usage("needs --catalog or --file".into())),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn algebra(src: &AlgebraSource, horizon: usize) -> Res<Output> {
    let (name, pres) = load_presentation(src)?;
    let alg = normalize_with(&pres, horizon)?;
    let z = center(&alg);
    let soc = socle_algebra(&alg)?;
    let trace = trace_from_presentation(&alg, &pres)?;
    let symmetric = is_symmetric(&alg, trace.as_deref()).is_some();
    let special = is_special_biserial(&alg);
    let stably = is_stably_biserial(&alg)?;
    let self_inj = is_self_injective(&alg)?;
    let quiver = quiver_of_algebra(&alg)?;
    let wild = wild_configuration_witness(&quiver);
    let show = |q: &klr_core::path_algebra::Quiver| -> Vec<String> {
        q.arrows.iter().map(|a| format!("{}: {} -> {}", a.name, q.vertices[a.src], q.vertices[a.tgt])).collect()
    };
    let arrows = show(&quiver);
    let named = show(&pres.quiver);
    let center_text: Vec<String> = z.iter().map(|x| alg.element_text(x)).collect();
    let mut o = Output::new(format!("algebra {name}"), Value::Null);
    o.row("dim", alg.dim());
    o.row("vertices", alg.vertices.join(", "));
    o.row("Cartan matrix", format!("{:?}", alg.cartan_matrix()));
    o.row("arrows", named.join("; "));
    o.row("Gabriel quiver", arrows.join("; "));
    o.row("center dim", z.len());
    o.row("center basis", center_text.join(", "));
    o.row("socle dim", soc.len());
    o.row("self-injective", yes(self_inj));
    o.row("symmetric", yes(symmetric));
    o.row("special-biserial", yes(special.holds));
    o.row("stably-biserial", yes(stably.holds));
    o.row("wild witness", wild.as_ref().map_or("none".to_string(), |w| format!("loops {} at {} with {}", w.loops.join(", "), w.vertex, w.arrow)));
    o.json = json!({
        "name": name,
        "dim": alg.dim(),
        "vertices": alg.vertices,
        "cartan": alg.cartan_matrix(),
        "arrows": named,
        "gabriel_quiver": arrows,
        "center_dim": z.len(),
        "center": center_text,
        "socle_dim": soc.len(),
        "self_injective": self_inj,
        "symmetric": symmetric,
        "special_biserial": special,
        "stably_biserial": stably,
        "wild_witness": wild,
    });
    Ok(o)
}

fn translate_key(src: &AlgebraSource) -> Res<Option<String>> {
    Ok(match src.catalog.as_deref() {
        Some("basic-2delta") => Some(if is_nonzero(&lambda(&src.lambda)?) { "basic-1" } else { "basic-0" }.to_string()),
        Some(n) if !tau_statements(n).is_empty() => Some(n.to_string()),
        _ => None,
    })
}

fn strings(src: &AlgebraSource, horizon: usize, maxlen: usize, bands: bool, tau: bool, sosb: bool) -> Res<Output> {
    let (name, pres) = load_presentation(src)?;
    let alg: FDAlgebra = normalize_with(&pres, horizon)?;
    let sa = StringAlgebra::new(&alg)?;
    let mut o = Output::new(format!("strings of {name}, length <= {maxlen}"), Value::Null);
    let mut j = serde_json::Map::new();
    let list_all = !(bands || tau || sosb);
    if list_all {
        let all: Vec<String> = sa.enumerate_strings(maxlen).iter().map(|w| sa.name(w)).collect();
        o.row("strings", all.len());
        for s in &all {
            o.row("string", s);
        }
        j.insert("strings".into(), json!(all));
    }
    if bands {
        let all: Vec<String> = sa.enumerate_bands(maxlen).iter().map(|w| sa.name(w)).collect();
        o.row("bands", all.len());
        for s in &all {
            o.row("band", s);
        }
        j.insert("bands".into(), json!(all));
    }
    if tau {
        let h: &Homological = &sa.hom;
        let mut orbit = Vec::new();
        for w in sa.enumerate_strings(maxlen) {
            let m = sa.string_module(&w)?;
            if h.is_projective(&m)? {
                continue;
            }
            let t = h.tau(&m)?;
            let image = sa.identify(&t, maxlen.max(t.dim))?.map_or("?".to_string(), |v| sa.name(&v));
            o.row(format!("tau M({})", sa.name(&w)), format!("M({image})"));
            orbit.push(json!({"module": sa.name(&w), "tau": image}));
        }
        j.insert("tau".into(), json!(orbit));
        if let Some(key) = translate_key(src)? {
            let table = tau_statements(&key);
            let bad = tau_failures(&alg, &table)?;
            let mut stmts = Vec::new();
            for (lhs, rhs) in &table {
                let text = format!("tau({}) = {}", lhs.text(), rhs.text());
                let ok = !bad.iter().any(|b| *b == format!("tau({}) != {}", lhs.text(), rhs.text()));
                o.row(text.clone(), mark(ok));
                stmts.push(json!({"statement": text, "passed": ok}));
            }
            o.passed &= bad.is_empty();
            j.insert("statements".into(), json!(stmts));
        }
    }
    if sosb {
        let pairs: Vec<[String; 2]> = sa.sosb_pairs(maxlen)?.iter().map(|(a, b)| [sa.name(a), sa.name(b)]).collect();
        o.row("orthogonal stable brick pairs", pairs.len());
        for [a, b] in &pairs {
            o.row("pair", format!("M({a}), M({b})"));
        }
        j.insert("sosb".into(), json!(pairs));
        if translate_key(src)?.as_deref() == Some("basic-1") {
            let found: Vec<(StringWord, StringWord)> =
                sa.sosb_pairs(maxlen)?.iter().map(|(a, b)| (sa.canonical_string(a), sa.canonical_string(b))).collect();
            let mut listed = Vec::new();
            for (x0, x1) in LISTED_PAIRS {
                let (a, b) = (sa.canonical_string(&sa.parse(x0)?), sa.canonical_string(&sa.parse(x1)?));
                let present = found.iter().any(|p| *p == (a.clone(), b.clone()) || *p == (b.clone(), a.clone()));
                o.row(format!("listed pair M({x0}), M({x1})"), if present { "found" } else { "missing" });
                o.passed &= present;
                listed.push(json!({"x0": x0, "x1": x1, "found": present}));
            }
            j.insert("listed".into(), json!(listed));
        }
    }
    o.json = Value::Object(j);
    Ok(o)
}

fn report(lam: &str, seed: u64, only: Option<String>, format: Format) -> Res<(String, bool)> {
    let mut cfg = reproduce::Config { lambda: lambda(lam)?, seed, ..Default::default() };
    if let Some(f) = only {
        cfg.criteria = reproduce::select(&f)?;
    }
    let results = reproduce::run_all(&cfg)?;
    let ok = results.iter().all(|c| c.passed);
    let text = match format {
        Format::Md => reproduce::markdown(&cfg, &results),
        Format::Csv => reproduce::csv(&results),
        Format::Json => serde_json::to_string_pretty(&json!({"lambda": fmt_q(&cfg.lambda), "seed": seed, "criteria": results}))? + "\n",
    };
    Ok((text, ok))
}

fn run(cli: Cli) -> Res<()> {
    let out = match cli.cmd {
        Cmd::Report { lambda, seed, only } => {
            let (text, ok) = report(&lambda, seed, only, cli.format)?;
            print!("{text}");
            return if ok { Ok(()) } else { Err(Failure::Check) };
        }
        Cmd::Dims { ell, n, beta, nu, nu2 } => dims(ell, n, beta, nu, nu2)?,
        Cmd::Weyl { ell, partition, alpha, depth } => weyl(ell, partition, alpha, depth)?,
        Cmd::Verify { zoo, file, zoo_args } => verify(zoo, file, &zoo_args)?,
        Cmd::Construct { zoo, zoo_args, out } => construct(zoo, &zoo_args, out)?,
        Cmd::Algebra { src } => algebra(&src, cli.horizon)?,
        Cmd::Strings { src, maxlen, bands, tau, sosb } => strings(&src, cli.horizon, maxlen, bands, tau, sosb)?,
    };
    print!("{}", out.render(cli.format));
    if out.passed {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(2),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

//! `pnh`: batch front end to the group-theory engine and the curve checks.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 coset enumeration overflow.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use pnh_core::analysis::{
    abelian_invariants, todd_coxeter, AbelianInvariants, EnumerationError, DEFAULT_MAX_COSETS,
};
use pnh_core::curves::verify_persson_configuration;
use pnh_core::pipeline::{
    self, check_quotient, orbifold_cover, run_regressions, PipelineError, PipelineReport,
    RegressionVerdict,
};
use pnh_core::presentation::{tietze_simplify, Presentation};
use pnh_core::schreier::{subgroup_presentation, CyclicMap, SchreierError};
use pnh_core::syntax::{parse_braid, parse_presentation, parse_word};
use pnh_core::word::{Alphabet, GenSym};

/// Version of the `--json` document layout.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "pnh", version, about = "Fundamental groups of branched covers, by presentation")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a braid to a word of the free group on d1..dN.
    Act {
        #[arg(long)]
        braid: String,
        #[arg(long)]
        word: String,
        /// Number of strands.
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Name of the free generators.
        #[arg(long, default_value = "d")]
        fiber: String,
    },
    /// Parse and normalise a presentation.
    Present {
        /// Presentation file, `-` for stdin.
        file: String,
        /// Apply Tietze simplification.
        #[arg(long)]
        simplify: bool,
    },
    /// Kernel of a map onto a cyclic group, by Reidemeister-Schreier.
    Schreier {
        file: String,
        #[arg(long)]
        modulus: u32,
        /// Generator images, e.g. `a=1,b=0`.
        #[arg(long)]
        map: String,
        #[arg(long)]
        simplify: bool,
    },
    /// Order by Todd-Coxeter enumeration over the trivial subgroup.
    Tc {
        file: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max: usize,
    },
    /// Abelian invariants from the Smith normal form.
    Abelianize { file: String },
    /// The orbifold computation for one or several k.
    Pipeline(PipelineArgs),
    /// Exact checks of the plane-curve configuration.
    VerifyConfig,
    /// Verdicts of the relation corpus for one k.
    Regression {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max: usize,
    },
}

#[derive(Args)]
struct PipelineArgs {
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    k: Option<u32>,
    /// Run k = 1..=max-k in parallel.
    #[arg(long, requires = "max_k")]
    all: bool,
    #[arg(long)]
    max_k: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    max: usize,
}

enum Failure {
    Check(String),
    Usage(String),
    Overflow(String),
}

impl From<EnumerationError> for Failure {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::Overflow(_) => Failure::Overflow(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Enumeration(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<SchreierError> for Failure {
    fn from(e: SchreierError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Common layout of every `--json` document.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Output {
    schema_version: u32,
    stage: String,
    generators: Vec<String>,
    relator_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    invariants: Option<AbelianInvariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abelian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regressions: Option<Vec<RegressionVerdict>>,
    #[serde(flatten)]
    extra: Map<String, Value>,
}

impl Output {
    fn new(stage: &str, generators: Vec<String>, relator_count: usize) -> Self {
        Output {
            schema_version: SCHEMA_VERSION,
            stage: stage.to_string(),
            generators,
            relator_count,
            order: None,
            invariants: None,
            abelian: None,
            regressions: None,
            extra: Map::new(),
        }
    }

    fn of(stage: &str, p: &Presentation) -> Self {
        let mut o = Output::new(stage, names(p.alphabet()), p.relators().len());
        o.extra.insert("presentation".into(), json!(p.to_string()));
        o
    }

    fn with(mut self, key: &str, v: Value) -> Self {
        self.extra.insert(key.into(), v);
        self
    }
}

fn names(a: &Alphabet) -> Vec<String> {
    a.iter().map(GenSym::to_string).collect()
}

fn read_input(file: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if file == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
    } else {
        text = fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
    }
    Ok(text)
}

fn read_presentation(file: &str) -> Result<Presentation, Failure> {
    let text = read_input(file)?;
    parse_presentation(&text).map_err(|e| Failure::Usage(format!("{file}:{e}")))
}

fn emit_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable output"));
}

fn act(braid: &str, word: &str, n: usize, fiber: &str, json: bool) -> Result<(), Failure> {
    let b = parse_braid(braid, n).map_err(|e| Failure::Usage(format!("braid: {e}")))?;
    let alphabet = Alphabet::indexed(fiber, n as u32);
    let w = parse_word(word, &alphabet).map_err(|e| Failure::Usage(format!("word: {e}")))?;
    let image = b.act(&w, &alphabet).map_err(|e| Failure::Usage(e.to_string()))?;
    if json {
        emit_json(&Output::new("act", names(&alphabet), 0).with("image", json!(image.to_string())));
    } else {
        println!("{image}");
    }
    Ok(())
}

fn present(file: &str, simplify: bool, json: bool) -> Result<(), Failure> {
    let mut p = read_presentation(file)?;
    if simplify {
        p = tietze_simplify(&p, usize::MAX).0;
    }
    if json {
        emit_json(&Output::of("present", &p).with("totalLength", json!(p.total_length())));
    } else {
        println!("{p}");
    }
    Ok(())
}

fn parse_map(spec: &str) -> Result<Vec<(GenSym, i64)>, Failure> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (g, v) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("map entry `{part}` is not name=value")))?;
        let w = pnh_core::syntax::parse_free_word(g).map_err(|e| Failure::Usage(format!("map: {e}")))?;
        let sym = match w.letters() {
            [l] if !l.inverse => l.sym.clone(),
            _ => return Err(Failure::Usage(format!("map key `{g}` is not a generator"))),
        };
        let v: i64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("map value `{v}` is not an integer")))?;
        out.push((sym, v));
    }
    Ok(out)
}

fn schreier(file: &str, modulus: u32, map: &str, simplify: bool, json: bool) -> Result<(), Failure> {
    let p = read_presentation(file)?;
    let q = CyclicMap::new(&p, modulus, parse_map(map)?)?;
    let (mut sub, _) = subgroup_presentation(&p, &q, None)?;
    if simplify {
        sub = tietze_simplify(&sub, usize::MAX).0;
    }
    if json {
        emit_json(&Output::of("schreier", &sub).with("index", json!(modulus)));
    } else {
        println!("{sub}");
    }
    Ok(())
}

fn tc(file: &str, max: usize, json: bool) -> Result<(), Failure> {
    let p = read_presentation(file)?;
    let table = todd_coxeter(&p, max)?;
    if json {
        let mut o = Output::of("tc", &p);
        o.order = Some(table.len());
        o.abelian = Some(table.is_abelian());
        emit_json(&o);
    } else {
        println!("order {}", table.len());
        println!("abelian {}", table.is_abelian());
    }
    Ok(())
}

fn abelianize(file: &str, json: bool) -> Result<(), Failure> {
    let p = read_presentation(file)?;
    let inv = abelian_invariants(&p);
    if json {
        let mut o = Output::of("abelianize", &p);
        o.invariants = Some(inv);
        emit_json(&o);
    } else {
        println!("{inv}");
    }
    Ok(())
}

fn pipeline_output(r: &PipelineReport) -> Output {
    let last = r.stages.last().expect("pipeline stages");
    let mut o = Output::new(&last.stage, last.generators.clone(), last.relator_count);
    o.order = Some(r.order);
    o.invariants = Some(r.invariants.clone());
    o.abelian = Some(r.abelian);
    o.regressions = Some(r.regressions.clone());
    o.with("k", json!(r.k))
        .with("m", json!(r.m))
        .with("stages", json!(r.stages))
        .with("presentation", json!(r.final_presentation))
        .with("checkQuotientOrder", json!(r.check_quotient_order))
        .with("passed", json!(r.passed()))
}

fn print_pipeline(r: &PipelineReport) {
    println!("k = {}, m = {}", r.k, r.m);
    for s in &r.stages {
        println!(
            "  {:<20} {:>3} generators {:>4} relators  length {}",
            s.stage,
            s.generators.len(),
            s.relator_count,
            s.total_length
        );
    }
    println!("  final      {}", r.final_presentation);
    println!("  order      {}", r.order);
    println!("  invariants {}", r.invariants);
    println!("  abelian    {}", r.abelian);
    println!("  |G_m|      {} (= 2m * order: {})", r.check_quotient_order, r.check_quotient_order == 2 * r.m as usize * r.order);
    let held = r.regressions.iter().filter(|v| v.holds).count();
    println!("  relations  {held}/{} hold", r.regressions.len());
    for v in r.regressions.iter().filter(|v| !v.holds) {
        let tag = if v.suspect { "suspect" } else { "FAILED" };
        println!("    {tag}: {} {}", v.id, v.relation);
    }
    println!("  {}", if r.passed() { "PASS" } else { "FAIL" });
}

fn run_pipeline(args: &PipelineArgs, json: bool) -> Result<(), Failure> {
    let ks: Vec<u32> = match (args.k, args.all, args.max_k) {
        (Some(k), _, _) => vec![k],
        (None, true, Some(max)) => (1..=max).collect(),
        _ => return Err(Failure::Usage("give --k K or --all --max-k N".into())),
    };
    // collect preserves the order of `ks`
    let results: Vec<Result<PipelineReport, PipelineError>> =
        ks.par_iter().map(|&k| pipeline::run_with_budget(k, args.max)).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.push(r?);
    }
    if json {
        let outs: Vec<Output> = reports.iter().map(pipeline_output).collect();
        if args.k.is_some() {
            emit_json(&outs[0]);
        } else {
            emit_json(&outs);
        }
    } else {
        for r in &reports {
            print_pipeline(r);
        }
    }
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(Failure::Check(format!("pipeline check failed for k = {}", r.k))),
        None => Ok(()),
    }
}

fn verify_config(json: bool) -> Result<(), Failure> {
    let report = verify_persson_configuration();
    if json {
        emit_json(
            &Output::new("verify-config", vec![], 0)
                .with("items", json!(report.items))
                .with("candidates", json!(report.candidates))
                .with("passed", json!(report.passed())),
        );
    } else {
        for i in &report.items {
            let tag = if i.passed { "PASS" } else { "FAIL" };
            println!("{tag} {:>2} {}: {}", i.id, i.title, i.detail);
        }
        for c in &report.candidates {
            println!(
                "candidate {}: on line {}, on curve {}, tangent {}, same as tangency point {}",
                c.point, c.on_line, c.on_curve, c.tangent, c.same_as_tangency_point
            );
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check("configuration check failed".into()))
    }
}

fn regression(k: u32, max: usize, json: bool) -> Result<(), Failure> {
    let m = k.checked_add(1).filter(|_| k > 0).ok_or(PipelineError::BadK)?;
    let cover = orbifold_cover(k)?;
    let check = todd_coxeter(&check_quotient(m), max)?;
    let verdicts = run_regressions(k, &cover, &check)?;
    if json {
        let mut o = Output::of("regression", &cover.kernel).with("k", json!(k));
        o.extra.remove("presentation");
        o.order = Some(check.len());
        o.regressions = Some(verdicts.clone());
        emit_json(&o);
    } else {
        for v in &verdicts {
            let tag = match (v.holds, v.suspect) {
                (true, _) => "holds",
                (false, true) => "fails (suspect)",
                (false, false) => "FAILS",
            };
            let stage = json!(v.stage);
            println!("{:<16} {:<12} {:<16} {}", v.id, stage.as_str().unwrap_or(""), tag, v.relation);
        }
    }
    match verdicts.iter().find(|v| !v.holds && !v.suspect) {
        Some(v) => Err(Failure::Check(format!("relation {} fails", v.id))),
        None => Ok(()),
    }
}

fn dispatch(cli: &Cli) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Act { braid, word, n, fiber } => act(braid, word, *n, fiber, json),
        Command::Present { file, simplify } => present(file, *simplify, json),
        Command::Schreier { file, modulus, map, simplify } => schreier(file, *modulus, map, *simplify, json),
        Command::Tc { file, max } => tc(file, *max, json),
        Command::Abelianize { file } => abelianize(file, json),
        Command::Pipeline(args) => run_pipeline(args, json),
        Command::VerifyConfig => verify_config(json),
        Command::Regression { k, max } => regression(*k, *max, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("pnh: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pnh: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Overflow(msg)) => {
            eprintln!("pnh: {msg}");
            ExitCode::from(3)
        }
    }
}

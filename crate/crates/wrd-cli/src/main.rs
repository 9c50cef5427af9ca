//! `wrd` — weighted Roman domination from the command line.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 malformed input graph,
//! 3 size guard exceeded, 4 a verified theorem failed.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wrd::bounds::{bounds_report, BoundsReport};
use wrd::differential::differential;
use wrd::families::{
    complete_bipartite_value, complete_value, cycle_upper_bound, FamilyResult,
};
use wrd::gen::{generate, GraphKind, WeightSampler};
use wrd::solvers::{gamma_wr, gamma_wr_auto, Method, SolveOptions, SolveResult};
use wrd::verify::{verify_corpus, verify_cycles, verify_graph, CorpusParams, CorpusReport};
use wrd::weight::{parse_rational, ratio_to_string, Weight};
use wrd::{parse_wrd, to_wrd_string, Error, RomanLabeling, WeightedGraph};

#[derive(Parser)]
#[command(
    name = "wrd",
    version,
    about = "Exact weighted Roman domination: solvers, bounds, families, verification",
    arg_required_else_help = true
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest n the 3^n labeling search will attempt.
    #[arg(long, global = true, value_name = "N")]
    labeling_guard: Option<usize>,
    /// Largest n the 2^n subset searches will attempt.
    #[arg(long, global = true, value_name = "N")]
    subset_guard: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ_wR of a graph (wrd format; `-` reads stdin).
    Solve(SolveArgs),
    /// Report the bounds on γ_wR and whether each one holds.
    Bounds(InputArgs),
    /// Maximize the weighted differential ∂(G).
    Diff(InputArgs),
    /// Evaluate a closed-form family formula from weights alone.
    Family(FamilyArgs),
    /// Re-derive the structural theorems on a graph or a seeded corpus.
    Verify(VerifyArgs),
    /// Generate a weighted graph and print it in wrd format.
    Gen(GenArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Path to a wrd-format graph, or `-` for stdin.
    input: String,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    /// brute, bnb, dp, diff, or auto (brute within the guard, else bnb).
    #[arg(long, default_value = "auto")]
    method: String,
    /// Enumerate every optimal labeling (brute method only).
    #[arg(long)]
    all_optima: bool,
    /// Prefer an optimum with the fewest 1-labels (brute method only).
    #[arg(long)]
    min_ones: bool,
}

#[derive(ValueEnum, Clone, Copy)]
enum FamilyKind {
    Complete,
    Bipartite,
    Cycle,
}

#[derive(Args)]
struct FamilyArgs {
    kind: FamilyKind,
    /// Vertex weights (complete and cycle families).
    weights: Vec<String>,
    /// Comma-separated weights of one side (bipartite family).
    #[arg(long, value_name = "W,W,...")]
    left: Option<String>,
    /// Comma-separated weights of the other side (bipartite family).
    #[arg(long, value_name = "W,W,...")]
    right: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    what: VerifyWhat,
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// Run every general-graph check against one graph.
    Graph(InputArgs),
    /// Run the general-graph checks over a seeded random corpus.
    Corpus(CorpusArgs),
    /// Run the cycle-family checks over random weightings per length.
    Cycles(CorpusArgs),
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus spec `n=1..8,p=1/2,trials=100,seed=0,w=int:1:9`
    /// (keys optional; cycles use `trials` per length and ignore `p`).
    #[arg(default_value = "")]
    spec: String,
}

#[derive(Args)]
struct GenArgs {
    /// path:N | cycle:N | complete:N | bipartite:S:T | star:LEAVES |
    /// empty:N | union:EDGES:ISOLATED | random:N:P
    #[arg(long)]
    kind: String,
    /// const:W | int:LO:HI | grid:DENOM:LO:HI
    #[arg(long, default_value = "int:1:9")]
    weights: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code: u8 = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut opts = SolveOptions::default();
    if let Some(n) = cli.labeling_guard {
        opts.labeling_guard = n;
    }
    if let Some(n) = cli.subset_guard {
        opts.subset_guard = n;
    }
    let outcome = match &cli.command {
        Command::Solve(args) => cmd_solve(args, &opts, cli.json),
        Command::Bounds(args) => cmd_bounds(args, &opts, cli.json),
        Command::Diff(args) => cmd_diff(args, &opts, cli.json),
        Command::Family(args) => cmd_family(args, cli.json),
        Command::Verify(args) => cmd_verify(args, &opts, cli.json),
        Command::Gen(args) => cmd_gen(args, cli.json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => 2,
                Error::SizeGuardExceeded { .. } => 3,
                _ => 1,
            })
        }
    }
}

fn load_graph(path: &str) -> Result<WeightedGraph, Error> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParams(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParams(format!("cannot read {path}: {e}")))?
    };
    Ok(parse_wrd(&text)?)
}

fn labeling_string(f: &RomanLabeling) -> String {
    f.to_string()
}

fn cmd_solve(args: &SolveArgs, opts: &SolveOptions, json: bool) -> Result<u8, Error> {
    let g = load_graph(&args.input.input)?;
    let mut opts = opts.clone();
    opts.enumerate_all_optima = args.all_optima;
    opts.tie_break_min_v1 = args.min_ones;
    let solved: SolveResult = if args.method == "auto" {
        if opts.enumerate_all_optima || opts.tie_break_min_v1 {
            gamma_wr(&g, Method::Brute, &opts)?
        } else {
            gamma_wr_auto(&g, &opts)?
        }
    } else {
        gamma_wr(&g, args.method.parse()?, &opts)?
    };
    if json {
        let mut out = json!({
            "gamma_wR": ratio_to_string(&solved.value),
            "witness": labeling_string(&solved.witness),
            "method": solved.method.to_string(),
        });
        if let Some(optima) = &solved.all_optima {
            out["optima"] = Value::Array(
                optima.iter().map(|f| Value::String(labeling_string(f))).collect(),
            );
        }
        println!("{out}");
    } else {
        println!("gamma_wR = {}", ratio_to_string(&solved.value));
        println!("witness = {}", labeling_string(&solved.witness));
        println!("method = {}", solved.method);
        if let Some(optima) = &solved.all_optima {
            println!("optima = {}", optima.len());
            for f in optima {
                println!("{}", labeling_string(f));
            }
        }
    }
    Ok(0)
}

fn opt_ratio(v: &Option<wrd::Rational>) -> String {
    v.as_ref().map_or_else(|| "n/a".into(), ratio_to_string)
}

fn opt_flag(v: Option<bool>) -> String {
    v.map_or_else(|| "n/a".into(), |b| b.to_string())
}

fn bounds_text(r: &BoundsReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}", r.n);
    let _ = writeln!(s, "w(G) = {}", ratio_to_string(&r.total_weight));
    let _ = writeln!(s, "gamma_w = {}", opt_ratio(&r.gamma_w));
    let _ = writeln!(s, "gamma_wR = {}", opt_ratio(&r.gamma_wr));
    match &r.degree_bound {
        Some(b) => {
            let _ = writeln!(s, "degree_bound = {}", ratio_to_string(&b.raw));
            let _ = writeln!(
                s,
                "degree_bound_ceiled = {}",
                b.ceiled.as_ref().map_or_else(|| "n/a".into(), ratio_to_string)
            );
        }
        None => {
            let _ = writeln!(s, "degree_bound = n/a");
            let _ = writeln!(s, "degree_bound_ceiled = n/a");
        }
    }
    let _ = writeln!(s, "weight_bound = {}", ratio_to_string(&r.weight_upper));
    let _ = writeln!(s, "weight_extremal = {}", r.weight_extremal);
    let _ = writeln!(s, "sandwich_lower_ok = {}", opt_flag(r.sandwich_lower_ok));
    let _ = writeln!(s, "sandwich_upper_ok = {}", opt_flag(r.sandwich_upper_ok));
    let _ = writeln!(s, "equality_iff_edgeless_ok = {}", opt_flag(r.equality_iff_edgeless_ok));
    let _ = writeln!(s, "degree_ok = {}", opt_flag(r.degree_ok));
    let _ = writeln!(s, "weight_ok = {}", opt_flag(r.weight_ok));
    let _ = writeln!(
        s,
        "weight_tight_iff_extremal_ok = {}",
        opt_flag(r.weight_tight_iff_extremal_ok)
    );
    match &r.nordhaus_gaddum {
        Some(ng) => {
            let _ = writeln!(s, "ng_sum = {}", ratio_to_string(&ng.sum));
            let _ = writeln!(s, "ng_lower = {}", ratio_to_string(&ng.lower));
            let _ = writeln!(s, "ng_upper = {}", ratio_to_string(&ng.upper));
            let _ = writeln!(s, "ng_lower_ok = {}", ng.lower_ok);
            let _ = writeln!(s, "ng_upper_ok = {}", ng.upper_ok);
        }
        None => {
            let _ = writeln!(s, "nordhaus_gaddum = n/a");
        }
    }
    let _ = writeln!(s, "all_ok = {}", r.all_ok());
    s
}

fn bounds_json(r: &BoundsReport) -> Value {
    let opt_r = |v: &Option<wrd::Rational>| match v {
        Some(x) => Value::String(ratio_to_string(x)),
        None => Value::Null,
    };
    let opt_b = |v: Option<bool>| match v {
        Some(x) => Value::Bool(x),
        None => Value::Null,
    };
    json!({
        "n": r.n,
        "total_weight": ratio_to_string(&r.total_weight),
        "gamma_w": opt_r(&r.gamma_w),
        "gamma_wR": opt_r(&r.gamma_wr),
        "degree_bound": r.degree_bound.as_ref().map(|b| json!({
            "raw": ratio_to_string(&b.raw),
            "ceiled": b.ceiled.as_ref().map(ratio_to_string),
        })),
        "weight_bound": ratio_to_string(&r.weight_upper),
        "weight_extremal": r.weight_extremal,
        "sandwich_lower_ok": opt_b(r.sandwich_lower_ok),
        "sandwich_upper_ok": opt_b(r.sandwich_upper_ok),
        "equality_iff_edgeless_ok": opt_b(r.equality_iff_edgeless_ok),
        "degree_ok": opt_b(r.degree_ok),
        "weight_ok": opt_b(r.weight_ok),
        "weight_tight_iff_extremal_ok": opt_b(r.weight_tight_iff_extremal_ok),
        "nordhaus_gaddum": r.nordhaus_gaddum.as_ref().map(|ng| json!({
            "gamma_wR": ratio_to_string(&ng.gamma_wr),
            "gamma_wR_complement": ratio_to_string(&ng.gamma_wr_complement),
            "lower": ratio_to_string(&ng.lower),
            "sum": ratio_to_string(&ng.sum),
            "upper": ratio_to_string(&ng.upper),
            "lower_ok": ng.lower_ok,
            "upper_ok": ng.upper_ok,
        })),
        "all_ok": r.all_ok(),
    })
}

fn cmd_bounds(args: &InputArgs, opts: &SolveOptions, json: bool) -> Result<u8, Error> {
    let g = load_graph(&args.input)?;
    let report = bounds_report(&g, opts)?;
    if json {
        println!("{}", bounds_json(&report));
    } else {
        print!("{}", bounds_text(&report));
    }
    Ok(0)
}

fn cmd_diff(args: &InputArgs, opts: &SolveOptions, json: bool) -> Result<u8, Error> {
    let g = load_graph(&args.input)?;
    let d = differential(&g, opts)?;
    let induced = wrd::differential::induced_labeling(&g, &d.best_set, &d.boundary);
    let gamma = g.total_weight() - &d.value;
    if json {
        println!(
            "{}",
            json!({
                "differential": ratio_to_string(&d.value),
                "set": d.best_set.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "boundary": d.boundary.iter().map(|v| v + 1).collect::<Vec<_>>(),
                "induced": labeling_string(&induced),
                "gamma_wR": ratio_to_string(&gamma),
            })
        );
    } else {
        println!("differential = {}", ratio_to_string(&d.value));
        println!("set = {}", d.best_set);
        println!("boundary = {}", d.boundary);
        println!("induced = {}", labeling_string(&induced));
        println!("gamma_wR = {}", ratio_to_string(&gamma));
    }
    Ok(0)
}

fn parse_weights(items: &[String]) -> Result<Vec<Weight>, Error> {
    items.iter().map(|s| s.parse()).collect()
}

fn parse_weight_list(csv: &str) -> Result<Vec<Weight>, Error> {
    csv.split(',').map(|s| s.parse()).collect()
}

fn cmd_family(args: &FamilyArgs, json: bool) -> Result<u8, Error> {
    let (result, cycle_bound): (FamilyResult, Option<wrd::Rational>) = match args.kind {
        FamilyKind::Complete => {
            let weights = parse_weights(&args.weights)?;
            (complete_value(&weights)?, None)
        }
        FamilyKind::Cycle => {
            let weights = parse_weights(&args.weights)?;
            let bound = cycle_upper_bound(&weights)?;
            let best = bound.best;
            (FamilyResult { value: best.weight, witness: best.labeling }, Some(bound.bound))
        }
        FamilyKind::Bipartite => {
            let (Some(left), Some(right)) = (&args.left, &args.right) else {
                return Err(Error::InvalidParams(
                    "the bipartite family needs --left and --right weight lists".into(),
                ));
            };
            if !args.weights.is_empty() {
                return Err(Error::InvalidParams(
                    "the bipartite family takes weights via --left/--right only".into(),
                ));
            }
            let x = parse_weight_list(left)?;
            let y = parse_weight_list(right)?;
            (complete_bipartite_value(&x, &y)?, None)
        }
    };
    // For cycles the periodic constructions only certify an upper bound;
    // name the value accordingly.
    let key = match args.kind {
        FamilyKind::Cycle => "best_construction",
        _ => "gamma_wR",
    };
    if json {
        let mut out = json!({
            key: ratio_to_string(&result.value),
            "witness": labeling_string(&result.witness),
        });
        if let Some(bound) = &cycle_bound {
            out["bound"] = Value::String(ratio_to_string(bound));
        }
        println!("{out}");
    } else {
        println!("{key} = {}", ratio_to_string(&result.value));
        println!("witness = {}", labeling_string(&result.witness));
        if let Some(bound) = &cycle_bound {
            println!("bound = {}", ratio_to_string(bound));
        }
    }
    Ok(0)
}

fn corpus_report_text(report: &CorpusReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "params = {}", report.params);
    let _ = writeln!(s, "trials = {}", report.trials);
    for record in &report.records {
        if record.failures.is_empty() {
            let _ = writeln!(
                s,
                "{}: pass {}/{} (applicable {})",
                record.theorem, record.passed, report.trials, record.applicable
            );
        } else {
            let _ = writeln!(
                s,
                "{}: FAIL {}/{} (applicable {})",
                record.theorem, record.passed, report.trials, record.applicable
            );
            for failure in &record.failures {
                let _ = writeln!(
                    s,
                    "  trial {} (seed {}): {}",
                    failure.trial, failure.graph_seed, failure.detail
                );
                for line in failure.graph.lines() {
                    let _ = writeln!(s, "    {line}");
                }
                if let Some(shrunk) = &failure.shrunk {
                    let _ = writeln!(s, "  shrunk:");
                    for line in shrunk.lines() {
                        let _ = writeln!(s, "    {line}");
                    }
                }
            }
        }
    }
    let _ = writeln!(s, "result = {}", if report.all_passed() { "PASS" } else { "FAIL" });
    s
}

fn corpus_report_json(report: &CorpusReport) -> Value {
    json!({
        "params": report.params.to_string(),
        "trials": report.trials,
        "checks": report.records.iter().map(|r| json!({
            "theorem": r.theorem.to_string(),
            "applicable": r.applicable,
            "passed": r.passed,
            "failures": r.failures.iter().map(|f| json!({
                "trial": f.trial,
                "seed": f.graph_seed,
                "detail": f.detail,
                "graph": f.graph,
                "shrunk": f.shrunk,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
    })
}

fn cmd_verify(args: &VerifyArgs, opts: &SolveOptions, json: bool) -> Result<u8, Error> {
    match &args.what {
        VerifyWhat::Graph(input) => {
            let g = load_graph(&input.input)?;
            let checks = verify_graph(&g, opts)?;
            let ok = checks.iter().all(|c| c.passed);
            if json {
                println!(
                    "{}",
                    json!({
                        "checks": checks.iter().map(|c| json!({
                            "theorem": c.theorem.to_string(),
                            "applicable": c.applicable,
                            "passed": c.passed,
                            "detail": c.detail,
                        })).collect::<Vec<_>>(),
                        "all_passed": ok,
                    })
                );
            } else {
                for c in &checks {
                    if !c.passed {
                        println!(
                            "{}: FAIL — {}",
                            c.theorem,
                            c.detail.as_deref().unwrap_or("no detail")
                        );
                    } else if c.applicable {
                        println!("{}: ok", c.theorem);
                    } else {
                        println!("{}: vacuous", c.theorem);
                    }
                }
                println!("result = {}", if ok { "PASS" } else { "FAIL" });
            }
            Ok(if ok { 0 } else { 4 })
        }
        VerifyWhat::Corpus(corpus) | VerifyWhat::Cycles(corpus) => {
            let params: CorpusParams = corpus.spec.parse()?;
            let report = if matches!(args.what, VerifyWhat::Corpus(_)) {
                verify_corpus(&params, opts)?
            } else {
                verify_cycles(&params, opts)?
            };
            let ok = report.all_passed();
            if json {
                println!("{}", corpus_report_json(&report));
            } else {
                print!("{}", corpus_report_text(&report));
            }
            Ok(if ok { 0 } else { 4 })
        }
    }
}

fn parse_kind(spec: &str) -> Result<GraphKind, Error> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let mut rest: Vec<&str> = parts.collect();
    let mut take_usize = |what: &str| -> Result<usize, Error> {
        if rest.is_empty() {
            return Err(Error::InvalidParams(format!("kind {name:?} needs {what}")));
        }
        let raw = rest.remove(0);
        raw.parse::<usize>()
            .map_err(|e| Error::InvalidParams(format!("bad {what} {raw:?}: {e}")))
    };
    let kind = match name {
        "path" => GraphKind::Path { n: take_usize("a vertex count")? },
        "cycle" => GraphKind::Cycle { n: take_usize("a vertex count")? },
        "complete" => GraphKind::Complete { n: take_usize("a vertex count")? },
        "bipartite" => GraphKind::CompleteBipartite {
            s: take_usize("two side sizes")?,
            t: take_usize("two side sizes")?,
        },
        "star" => GraphKind::Star { leaves: take_usize("a leaf count")? },
        "empty" => GraphKind::Empty { n: take_usize("a vertex count")? },
        "union" => GraphKind::DisjointUnion {
            edges: take_usize("edge and isolated counts")?,
            isolated: take_usize("edge and isolated counts")?,
        },
        "random" => {
            let n = take_usize("a vertex count and a probability")?;
            if rest.is_empty() {
                return Err(Error::InvalidParams("kind \"random\" needs a probability".into()));
            }
            let p = parse_rational(rest.remove(0))?;
            GraphKind::Random { n, p }
        }
        other => {
            return Err(Error::InvalidParams(format!(
                "unknown kind {other:?}; expected path, cycle, complete, bipartite, star, empty, union, or random"
            )))
        }
    };
    if !rest.is_empty() {
        return Err(Error::InvalidParams(format!(
            "kind spec {spec:?} has trailing fields"
        )));
    }
    Ok(kind)
}

fn cmd_gen(args: &GenArgs, json: bool) -> Result<u8, Error> {
    let kind = parse_kind(&args.kind)?;
    let sampler: WeightSampler = args.weights.parse()?;
    let g = generate(&kind, &sampler, args.seed)?;
    let text = to_wrd_string(&g);
    if json {
        println!("{}", json!({ "wrd": text }));
    } else {
        print!("{text}");
    }
    Ok(0)
}

//! `alliance`: compute alliance polynomials, evaluate closed forms, and
//! run verification harnesses.
//!
//! Exit codes: 0 success / all checks pass, 1 verification failure,
//! 2 input error, 3 brute-force cap exceeded.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use alliance_core::closed_forms::{
    complete_polynomial, cycle_polynomial, e1_polynomial, wheel_polynomial, WheelCoefficientTable,
};
use alliance_core::engine::{alliance_polynomial_with, EngineError, EngineOptions, DEFAULT_CAP};
use alliance_core::graph::{generate, parse_edge_list, Graph, GraphFamily, MAX_VERTICES};
use alliance_core::graph6::{parse_graph6, parse_graph6_corpus};
use alliance_core::poly::AlliancePolynomial;
use alliance_core::verify::{
    bcoeff_consistency, characterize, check_basic_properties, check_coefficient_dominance,
    check_join_theorem, check_path_unimodality, check_wheel_unimodality, enumerate_labeled_graphs,
    is_wheel_labeling, random_graph_suite, random_pair_suite, VerifyError, MAX_ENUMERATION_ORDER,
};

const DEFAULT_SEED: u64 = 20250810;

#[derive(Parser)]
#[command(
    name = "alliance",
    version,
    about = "Alliance polynomials of simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the alliance polynomial of a graph by exact enumeration.
    Compute(ComputeArgs),
    /// Emit a closed-form polynomial (wheel, cycle, complete, e1).
    ClosedForm(ClosedFormArgs),
    /// Run a verification harness; exits 0 iff every check passes.
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: GraphInput,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Args)]
struct GraphInput {
    /// Graph family to generate (requires --n).
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Order for --family.
    #[arg(long)]
    n: Option<usize>,
    /// Read a graph6 line from this file.
    #[arg(long, value_name = "PATH")]
    g6: Option<String>,
    /// Read an edge list ("n m" header, then "u v" lines) from a file,
    /// or from standard input when "-".
    #[arg(long, value_name = "PATH|-")]
    edges: Option<String>,
}

#[derive(Args, Clone, Copy)]
struct RunFlags {
    /// Brute-force enumeration cap; defaults to ALLIANCE_CAP or 24.
    #[arg(long)]
    cap: Option<usize>,
    /// Worker threads for subset enumeration (0 = auto).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Empty,
    Path,
    Cycle,
    Complete,
    CompleteMinusEdge,
    Star,
    Wheel,
}

impl FamilyArg {
    fn build(self, n: usize) -> GraphFamily {
        match self {
            FamilyArg::Empty => GraphFamily::Empty(n),
            FamilyArg::Path => GraphFamily::Path(n),
            FamilyArg::Cycle => GraphFamily::Cycle(n),
            FamilyArg::Complete => GraphFamily::Complete(n),
            FamilyArg::CompleteMinusEdge => GraphFamily::CompleteMinusEdge(n),
            FamilyArg::Star => GraphFamily::Star(n),
            FamilyArg::Wheel => GraphFamily::Wheel(n),
        }
    }
}

#[derive(Args)]
struct ClosedFormArgs {
    /// One of: wheel, cycle, complete, e1.
    #[arg(long, value_enum)]
    family: ClosedFormFamily,
    /// Order (not needed for e1).
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    run: RunFlags,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClosedFormFamily {
    Wheel,
    Cycle,
    Complete,
    E1,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Join decomposition: residual nonnegative, equal to the direct
    /// mixed-subset enumeration, with value (2^n1-1)(2^n2-1) at 1.
    Join {
        /// Number of seeded random pairs.
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        /// Maximum total order of a pair.
        #[arg(long, default_value_t = 12)]
        max_total: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Basic coefficient identities on random graphs and all generated
    /// families.
    Lemma {
        /// Number of seeded random graphs.
        #[arg(long, default_value_t = 500)]
        graphs: usize,
        /// Maximum order of a random graph.
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        /// Maximum order for generated families.
        #[arg(long, default_value_t = 12)]
        family_max: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Wheel characterization: group a corpus by polynomial and check the
    /// matches of A(W_order;x) are exactly the wheel labelings.
    Characterize {
        /// Wheel order; also the corpus order when no file is given.
        #[arg(long)]
        order: usize,
        /// Optional newline-separated graph6 corpus file; defaults to all
        /// labeled graphs of the given order (order <= 7).
        #[arg(long, value_name = "PATH")]
        corpus: Option<String>,
        /// Omit the per-polynomial groups from the report.
        #[arg(long)]
        summary: bool,
        #[command(flatten)]
        run: RunFlags,
    },
    /// Unimodality sweeps: even wheels, coefficient dominance, and the
    /// path-graph boundary.
    Unimodal {
        /// Maximum wheel order (even orders are checked).
        #[arg(long, default_value_t = 24)]
        max: usize,
        /// Maximum path order for the brute-force boundary check.
        #[arg(long, default_value_t = 10)]
        paths: usize,
        #[command(flatten)]
        run: RunFlags,
    },
    /// b-coefficient consistency: closed formula vs exhaustive string
    /// scan vs the four-case split.
    Bcoeff {
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        #[command(flatten)]
        run: RunFlags,
    },
}

enum CliError {
    /// Bad input or unusable configuration (exit 2).
    Input(String),
    /// Brute-force cap exceeded (exit 3).
    Cap(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) => m,
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::OrderExceedsCap { .. } => CliError::Cap(e.to_string()),
            EngineError::EmptySubset => CliError::Input(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Engine(inner) => inner.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::ClosedForm(args) => cmd_closed_form(args),
        Command::Verify(cmd) => cmd_verify(cmd),
    };
    match result {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn engine_options(run: &RunFlags) -> Result<EngineOptions, CliError> {
    let cap = match run.cap {
        Some(cap) => cap,
        None => match std::env::var("ALLIANCE_CAP") {
            Ok(value) => value
                .parse()
                .map_err(|_| CliError::Input(format!("bad ALLIANCE_CAP value {value:?}")))?,
            Err(_) => DEFAULT_CAP,
        },
    };
    if cap > MAX_VERTICES {
        return Err(CliError::Input(format!(
            "cap {cap} exceeds vertex capacity {MAX_VERTICES}"
        )));
    }
    Ok(EngineOptions {
        cap,
        threads: run.threads,
    })
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

fn cmd_compute(args: ComputeArgs) -> Result<bool, CliError> {
    let options = engine_options(&args.run)?;
    let graph = load_graph(&args.input)?;
    let poly = alliance_polynomial_with(&graph, &options)?;
    emit_polynomial(&poly, args.run.format, None);
    Ok(true)
}

fn load_graph(input: &GraphInput) -> Result<Graph, CliError> {
    let sources = [
        input.family.is_some(),
        input.g6.is_some(),
        input.edges.is_some(),
    ];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(CliError::Input(
            "exactly one of --family, --g6, --edges is required".into(),
        ));
    }
    if let Some(family) = input.family {
        let n = input
            .n
            .ok_or_else(|| CliError::Input("--family requires --n".into()))?;
        return generate(family.build(n)).map_err(|e| CliError::Input(e.to_string()));
    }
    if let Some(path) = &input.g6 {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| CliError::Input(format!("{path} contains no graph6 line")))?;
        return parse_graph6(line.as_bytes()).map_err(|e| CliError::Input(e.to_string()));
    }
    let path = input.edges.as_ref().expect("validated above");
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?
    };
    parse_edge_list(&text).map_err(|e| CliError::Input(e.to_string()))
}

// ---------------------------------------------------------------------------
// closed-form
// ---------------------------------------------------------------------------

fn cmd_closed_form(args: ClosedFormArgs) -> Result<bool, CliError> {
    let n = args.n;
    let require_n =
        |what: &str| n.ok_or_else(|| CliError::Input(format!("--family {what} requires --n")));
    let (poly, table) = match args.family {
        ClosedFormFamily::Wheel => {
            let n = require_n("wheel")?;
            let poly = wheel_polynomial(n).map_err(|e| CliError::Input(e.to_string()))?;
            let table =
                WheelCoefficientTable::new(n).map_err(|e| CliError::Input(e.to_string()))?;
            (poly, Some(table))
        }
        ClosedFormFamily::Cycle => (
            cycle_polynomial(require_n("cycle")?).map_err(|e| CliError::Input(e.to_string()))?,
            None,
        ),
        ClosedFormFamily::Complete => (
            complete_polynomial(require_n("complete")?)
                .map_err(|e| CliError::Input(e.to_string()))?,
            None,
        ),
        ClosedFormFamily::E1 => {
            if let Some(n) = n {
                if n != 1 {
                    return Err(CliError::Input("e1 has order 1".into()));
                }
            }
            (e1_polynomial(), None)
        }
    };
    emit_polynomial(&poly, args.run.format, table.as_ref());
    Ok(true)
}

// ---------------------------------------------------------------------------
// polynomial output
// ---------------------------------------------------------------------------

fn coeff_pairs(poly: &AlliancePolynomial) -> Vec<Value> {
    poly.coeffs()
        .iter()
        .map(|(&e, &c)| json!([e, c.to_string()]))
        .collect()
}

fn emit_polynomial(
    poly: &AlliancePolynomial,
    format: Format,
    table: Option<&WheelCoefficientTable>,
) {
    match format {
        Format::Json => {
            let degrees = poly.degrees().ok();
            let mut body = json!({
                "order": poly.order(),
                "max_degree": degrees.map(|d| d.0),
                "min_degree": degrees.map(|d| d.1),
                "coeffs": coeff_pairs(poly),
                "eval_at_one": poly.eval_at_one().to_string(),
            });
            if let Some(table) = table {
                body["coefficient_table"] = json!({
                    "xi": table.xi().to_string(),
                    "a": table.a_entries().iter().map(|(&k, &v)| json!([k, v.to_string()])).collect::<Vec<_>>(),
                    "b": table.b_entries().iter().map(|(&k, &v)| json!([k, v.to_string()])).collect::<Vec<_>>(),
                });
            }
            print_json(&body);
        }
        Format::Text => {
            println!("order: {}", poly.order());
            if let Ok((deg, deg_min)) = poly.degrees() {
                println!("max_degree: {deg}");
                println!("min_degree: {deg_min}");
            }
            println!("poly: {poly}");
            println!("eval_at_one: {}", poly.eval_at_one());
            if let Some(table) = table {
                println!("xi: {}", table.xi());
                for (&k, &v) in table.a_entries() {
                    println!("a[{k}] = {v}");
                }
                for (&k, &v) in table.b_entries() {
                    println!("b[{k}] = {v}");
                }
            }
        }
        Format::Csv => {
            println!("exponent,alliance_index,coefficient");
            for (&e, &c) in poly.coeffs() {
                let index = e as i64 - poly.order() as i64;
                println!("{e},{index},{c}");
            }
        }
    }
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn cmd_verify(cmd: VerifyCmd) -> Result<bool, CliError> {
    let run = match &cmd {
        VerifyCmd::Join { run, .. }
        | VerifyCmd::Lemma { run, .. }
        | VerifyCmd::Characterize { run, .. }
        | VerifyCmd::Unimodal { run, .. }
        | VerifyCmd::Bcoeff { run, .. } => *run,
    };
    if run.format == Format::Csv {
        return Err(CliError::Input(
            "csv output is not supported for verify".into(),
        ));
    }
    let options = engine_options(&run)?;
    let report = match cmd {
        VerifyCmd::Join {
            pairs,
            max_total,
            seed,
            ..
        } => verify_join(pairs, max_total, seed, &options)?,
        VerifyCmd::Lemma {
            graphs,
            max_order,
            family_max,
            seed,
            ..
        } => verify_lemma(graphs, max_order, family_max, seed, &options)?,
        VerifyCmd::Characterize {
            order,
            corpus,
            summary,
            ..
        } => verify_characterize(order, corpus.as_deref(), summary, &options)?,
        VerifyCmd::Unimodal { max, paths, .. } => verify_unimodal(max, paths, &options)?,
        VerifyCmd::Bcoeff { max_n, .. } => verify_bcoeff(max_n)?,
    };
    let passed = report["passed"].as_bool().unwrap_or(false);
    match run.format {
        Format::Json => print_json(&report),
        Format::Text => print_verify_text(&report),
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(passed)
}

fn print_verify_text(report: &Value) {
    let harness = report["harness"].as_str().unwrap_or("?");
    let passed = report["passed"].as_bool().unwrap_or(false);
    println!(
        "{harness}: {}",
        if passed {
            "all checks passed"
        } else {
            "FAILED"
        }
    );
    for (key, value) in report.as_object().into_iter().flatten() {
        if let Some(items) = value.as_array() {
            println!("  {key}: {} entries", items.len());
        }
    }
    if !passed {
        println!("  details: rerun with --format json");
    }
}

fn verify_join(
    pairs: usize,
    max_total: usize,
    seed: u64,
    options: &EngineOptions,
) -> Result<Value, CliError> {
    if max_total < 2 {
        return Err(CliError::Input("--max-total must be at least 2".into()));
    }
    let mut cases = Vec::new();
    let mut all = true;
    let mut run_case = |label: String, g1: &Graph, g2: &Graph| -> Result<(), CliError> {
        let report = check_join_theorem(g1, g2, options)?;
        all &= report.passed();
        cases.push(json!({
            "pair": label,
            "n1": g1.order(),
            "n2": g2.order(),
            "residual_at_one": report.residual_at_one.to_string(),
            "expected_at_one": report.expected_at_one.to_string(),
            "residual_degree": report.residual_degree,
            "union_degree": report.union_degree,
            "degrees_match": report.degrees_match(),
            "passed": report.passed(),
        }));
        Ok(())
    };

    for n in 4..=12.min(options.cap) {
        let e1 = generate(GraphFamily::Empty(1)).map_err(|e| CliError::Input(e.to_string()))?;
        let c = generate(GraphFamily::Cycle(n - 1)).map_err(|e| CliError::Input(e.to_string()))?;
        run_case(format!("E_1 + C_{}", n - 1), &e1, &c)?;
    }
    for (i, (g1, g2)) in random_pair_suite(seed, pairs, max_total).iter().enumerate() {
        run_case(format!("random#{i}"), g1, g2)?;
    }
    Ok(json!({
        "harness": "join",
        "seed": seed,
        "passed": all,
        "cases": cases,
    }))
}

fn verify_lemma(
    graphs: usize,
    max_order: usize,
    family_max: usize,
    seed: u64,
    options: &EngineOptions,
) -> Result<Value, CliError> {
    let mut cases = Vec::new();
    let mut all = true;
    let mut run_case = |label: String, g: &Graph| -> Result<(), CliError> {
        let report = check_basic_properties(g, options)?;
        all &= report.passed();
        let failed: Vec<Value> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| json!({"name": c.name, "detail": c.detail}))
            .collect();
        cases.push(json!({
            "graph": label,
            "order": g.order(),
            "size": g.size(),
            "passed": report.passed(),
            "failed_checks": failed,
        }));
        Ok(())
    };

    for g in family_graphs(family_max) {
        let label = format!("family(n={}, m={})", g.order(), g.size());
        run_case(label, &g)?;
    }
    for (i, g) in random_graph_suite(seed, graphs, max_order)
        .iter()
        .enumerate()
    {
        run_case(format!("random#{i}"), g)?;
    }
    Ok(json!({
        "harness": "lemma",
        "seed": seed,
        "passed": all,
        "cases": cases,
    }))
}

/// Every generated family instance with order at most `max_order`.
fn family_graphs(max_order: usize) -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 1..=max_order {
        for family in [
            GraphFamily::Empty(n),
            GraphFamily::Path(n),
            GraphFamily::Cycle(n),
            GraphFamily::Complete(n),
            GraphFamily::CompleteMinusEdge(n),
            GraphFamily::Star(n),
            GraphFamily::Wheel(n),
        ] {
            if let Ok(g) = generate(family) {
                graphs.push(g);
            }
        }
    }
    graphs
}

fn verify_characterize(
    order: usize,
    corpus_path: Option<&str>,
    summary: bool,
    options: &EngineOptions,
) -> Result<Value, CliError> {
    let target = wheel_polynomial(order).map_err(|e| CliError::Input(e.to_string()))?;
    let mut expected = Vec::new();
    let report = match corpus_path {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {path}: {e}")))?;
            let corpus = parse_graph6_corpus(&text).map_err(|e| CliError::Input(e.to_string()))?;
            let graphs: Vec<Graph> = corpus.into_iter().map(|(_, g)| g).collect();
            for (i, g) in graphs.iter().enumerate() {
                if is_wheel_labeling(g, order) {
                    expected.push(i);
                }
            }
            characterize(graphs, &target, options)
        }
        None => {
            if order > MAX_ENUMERATION_ORDER {
                return Err(CliError::Input(format!(
                    "labeled exhaustion supports order <= {MAX_ENUMERATION_ORDER}; \
                     pass --corpus for larger orders"
                )));
            }
            let corpus = enumerate_labeled_graphs(order)
                .map_err(|e| CliError::Input(e.to_string()))?
                .enumerate()
                .map(|(i, g)| {
                    if is_wheel_labeling(&g, order) {
                        expected.push(i);
                    }
                    g
                });
            characterize(corpus, &target, options)
        }
    };
    let passed = report.target_matches == expected;
    let mut body = json!({
        "harness": "characterize",
        "order": order,
        "target": target.canonical_text(),
        "passed": passed,
        "target_matches": report.target_matches,
        "expected_matches": expected,
        "group_count": report.groups.len(),
        "skipped": report.skipped.iter().map(|(pos, why)| json!([pos, why])).collect::<Vec<_>>(),
    });
    if !summary {
        body["groups"] = json!(report.groups);
    }
    Ok(body)
}

fn verify_unimodal(max: usize, paths: usize, options: &EngineOptions) -> Result<Value, CliError> {
    let wheels = check_wheel_unimodality(max)?;
    let dominance = check_coefficient_dominance(max)?;
    let path_entries = check_path_unimodality(paths, options)?;
    let paths_pass = path_entries
        .iter()
        .all(|e| e.unimodal == e.expected_unimodal);
    let passed = wheels.passed() && dominance.iter().all(|d| d.passed()) && paths_pass;
    Ok(json!({
        "harness": "unimodal",
        "passed": passed,
        "wheels": wheels.entries.iter().map(|e| json!({
            "order": e.order,
            "unimodal": e.unimodal,
            "mode_exponent": e.mode_exponent,
            "expected_mode_exponent": e.expected_mode_exponent,
            "all_exponents_odd": e.all_exponents_odd,
            "passed": e.passed,
        })).collect::<Vec<_>>(),
        "coefficient_dominance": dominance.iter().map(|d| json!({
            "order": d.order,
            "failures": d.failures.iter().map(|&(r, a, b)| json!([r, a.to_string(), b.to_string()])).collect::<Vec<_>>(),
            "passed": d.passed(),
        })).collect::<Vec<_>>(),
        "paths": path_entries.iter().map(|e| json!({
            "order": e.order,
            "unimodal": e.unimodal,
            "expected_unimodal": e.expected_unimodal,
            "passed": e.unimodal == e.expected_unimodal,
        })).collect::<Vec<_>>(),
    }))
}

fn verify_bcoeff(max_n: usize) -> Result<Value, CliError> {
    if max_n < 4 {
        return Err(CliError::Input("--max-n must be at least 4".into()));
    }
    let entries = bcoeff_consistency(max_n)?;
    let passed = entries.iter().all(|e| e.passed());
    Ok(json!({
        "harness": "bcoeff",
        "max_n": max_n,
        "passed": passed,
        "entries": entries.iter().map(|e| json!({
            "n": e.n,
            "k": e.k,
            "formula": e.formula.to_string(),
            "string_oracle": e.string_oracle.to_string(),
            "case_sum": e.case_sum.to_string(),
            "passed": e.passed(),
        })).collect::<Vec<_>>(),
    }))
}

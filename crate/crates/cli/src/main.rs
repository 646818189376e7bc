//! `octal-games`: evaluate octal vertex-deletion games on graphs.
//!
//! Positions are described in a small text language (`path:7`,
//! `star:1,1,3,4`, `bistar:1,1/2/1,2`, `cat:37:2,4`, `edges:4;0-1,1-2`,
//! ...), either inline or as a file of one spec per line; multiple specs
//! form a disjoint union. Rules are octal codes like `0.33`. Output is
//! human-readable text by default and a JSON document with `--json`; both
//! are byte-deterministic for fixed inputs and flags.
//!
//! Exit codes: 0 success, 1 verification failure or internal error,
//! 2 parse/usage error, 3 resource limit exceeded.

use std::path::Path;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};

use octal_games::closed_form::{spec_grundy, star_table};
use octal_games::dsl::{parse_document, parse_line, GraphSpec};
use octal_games::engine::{grundy, winning_moves, EvalCache, Outcome, DEFAULT_CACHE_LIMIT};
use octal_games::families::{BistarSpec, StarSpec};
use octal_games::graph::{Graph, VertexSet};
use octal_games::octal::{detect_period, grundy_sequence, OctalCode};
use octal_games::verify::{
    search_caterpillars, verify_bistars, verify_caterpillar, verify_counterexample,
    verify_heap_path, verify_paths_cycles, verify_star_table, VerificationReport,
};
use octal_games::{Error, Result};

#[derive(Parser)]
#[command(
    name = "octal-games",
    version,
    about = "Exact solver for octal vertex-deletion games on graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the game value and outcome of a position
    Grundy(EvalArgs),
    /// Compute only the N/P outcome of a position
    Outcome(EvalArgs),
    /// List the winning moves from a position
    Moves(MovesArgs),
    /// Print the star value table (k arms, j of them of length 2)
    StarTable(StarTableArgs),
    /// Print heap values of a code, optionally detecting periodicity
    Sequence(SequenceArgs),
    /// Run a self-verification suite
    Verify(VerifyArgs),
    /// Run an exhaustive search
    Search(SearchArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Octal code, e.g. 0.33
    #[arg(long, default_value = "0.33")]
    code: String,
    /// Graph spec (one DSL line) or a path to a file of DSL lines
    #[arg(long)]
    graph: String,
    /// Run the general engine even when a closed form applies; both
    /// results are then cross-checked
    #[arg(long)]
    force_engine: bool,
    /// Cap on memoized positions
    #[arg(long, default_value_t = DEFAULT_CACHE_LIMIT)]
    cache_limit: usize,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MovesArgs {
    /// Octal code, e.g. 0.33
    #[arg(long, default_value = "0.33")]
    code: String,
    /// Graph spec (one DSL line) or a path to a file of DSL lines
    #[arg(long)]
    graph: String,
    /// Cap on memoized positions
    #[arg(long, default_value_t = DEFAULT_CACHE_LIMIT)]
    cache_limit: usize,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StarTableArgs {
    /// Largest row index k (rows 0..=k are printed)
    #[arg(long, default_value_t = 5)]
    rows: usize,
    /// Largest column index j (defaults to the largest row; always
    /// clipped at j <= k)
    #[arg(long)]
    cols: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Emit a JSON document instead of text or CSV
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct SequenceArgs {
    /// Octal code, e.g. 0.33
    #[arg(long, default_value = "0.33")]
    code: String,
    /// Largest heap size to evaluate
    #[arg(long, default_value_t = 20)]
    max: usize,
    /// Report the smallest (preperiod, period) visible in the sequence
    #[arg(long)]
    detect_period: bool,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(subcommand)]
    suite: VerifySuite,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Engine vs n mod 3 on all paths and cycles up to --max vertices
    Paths {
        #[arg(long, default_value_t = 60)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Star table: pinned rows, eventual patterns, and an engine sweep
    /// over stars with up to --max-arms arms of length 1 or 2
    Stars {
        #[arg(long, default_value_t = 6)]
        max_arms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Bistar closed form vs engine: full sweep plus every join-table cell
    Bistars {
        #[arg(long, default_value_t = 3)]
        max_arms: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 5)]
        max_middle: usize,
        #[arg(long)]
        json: bool,
    },
    /// The attachment-sensitivity counterexample (N flips to P)
    Counterexample {
        #[arg(long)]
        json: bool,
    },
    /// The 52-vertex caterpillar evaluates to 10 (heavyweight)
    Caterpillar {
        #[arg(long)]
        json: bool,
    },
    /// Heap values equal path values for five codes up to --max
    HeapPath {
        #[arg(long, default_value_t = 20)]
        max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[command(subcommand)]
    what: SearchKind,
}

#[derive(Subcommand)]
enum SearchKind {
    /// Evaluate every caterpillar (mirror images once) up to a spine
    /// length, reporting those with a target value
    Caterpillars {
        #[arg(long, default_value_t = 8)]
        spine_max: usize,
        /// Value to search for
        #[arg(long)]
        target: u32,
        /// Per-instance cap on memoized positions
        #[arg(long, default_value_t = DEFAULT_CACHE_LIMIT)]
        cache_limit: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse { .. } | Error::InvalidArgument(_) => 2,
                Error::ResourceLimit { .. } => 3,
                Error::Internal(_) => 1,
            };
            process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Grundy(args) => cmd_eval(args, true),
        Command::Outcome(args) => cmd_eval(args, false),
        Command::Moves(args) => cmd_moves(args),
        Command::StarTable(args) => cmd_star_table(args),
        Command::Sequence(args) => cmd_sequence(args),
        Command::Verify(args) => cmd_verify(args.suite),
        Command::Search(args) => match args.what {
            SearchKind::Caterpillars { spine_max, target, cache_limit, json } => {
                cmd_search_caterpillars(spine_max, target, cache_limit, json)
            }
        },
    }
}

// ---------------------------------------------------------------------------
// Input handling
// ---------------------------------------------------------------------------

/// Interpret `--graph`: a valid DSL line wins; otherwise, an existing file
/// is read as a document of DSL lines. The original DSL error is reported
/// when neither applies.
fn load_specs(graph: &str) -> Result<Vec<GraphSpec>> {
    match parse_line(graph) {
        Ok(spec) => Ok(vec![spec]),
        Err(dsl_error) => {
            let path = Path::new(graph);
            if path.is_file() {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidArgument(format!("cannot read {graph}: {e}"))
                })?;
                let specs = parse_document(&text)?;
                if specs.is_empty() {
                    return Err(Error::InvalidArgument(format!(
                        "{graph} contains no graph specs"
                    )));
                }
                Ok(specs)
            } else {
                Err(dsl_error)
            }
        }
    }
}

fn realize_union(specs: &[GraphSpec]) -> Result<Graph> {
    let mut g = Graph::new(0);
    for spec in specs {
        g = g.disjoint_union(&spec.realize()?);
    }
    Ok(g)
}

fn specs_label(specs: &[GraphSpec]) -> String {
    specs
        .iter()
        .map(GraphSpec::to_string)
        .collect::<Vec<_>>()
        .join(" + ")
}

fn parse_code(text: &str) -> Result<OctalCode> {
    OctalCode::parse(text)
}

fn is_033(code: &OctalCode) -> bool {
    code.digits() == [3, 3]
}

// ---------------------------------------------------------------------------
// grundy / outcome
// ---------------------------------------------------------------------------

fn cmd_eval(args: EvalArgs, show_value: bool) -> Result<i32> {
    let code = parse_code(&args.code)?;
    let specs = load_specs(&args.graph)?;
    // Validate realizability up front even on the closed-form route, so
    // `cycle:2` fails identically on every path.
    let union = realize_union(&specs)?;

    let closed: Option<u32> = if is_033(&code) {
        specs
            .iter()
            .map(spec_grundy)
            .try_fold(0u32, |acc, v| v.map(|v| acc ^ v))
    } else {
        None
    };
    let (value, method) = match closed {
        Some(v) if !args.force_engine => (v, "closed-form"),
        Some(v) => {
            let cache = EvalCache::with_limit(code.clone(), args.cache_limit);
            let e = grundy(&union, &code, &cache)?;
            if e != v {
                return Err(Error::Internal(format!(
                    "closed form gives {v} but the engine gives {e} for {}",
                    specs_label(&specs)
                )));
            }
            (v, "closed-form+engine")
        }
        None => {
            let cache = EvalCache::with_limit(code.clone(), args.cache_limit);
            (grundy(&union, &code, &cache)?, "engine")
        }
    };
    let outcome = Outcome::from_value(value);

    if args.json {
        let mut doc = serde_json::json!({
            "graph": specs.iter().map(GraphSpec::to_string).collect::<Vec<_>>(),
            "code": code.to_string(),
            "method": method,
            "outcome": outcome,
        });
        if show_value {
            doc["value"] = serde_json::json!(value);
        }
        println!("{doc}");
    } else {
        println!("graph: {}", specs_label(&specs));
        println!("code: {code}");
        println!("method: {method}");
        if show_value {
            println!("value: {value}");
        }
        println!("outcome: {outcome}");
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// moves
// ---------------------------------------------------------------------------

fn cmd_moves(args: MovesArgs) -> Result<i32> {
    let code = parse_code(&args.code)?;
    let specs = load_specs(&args.graph)?;
    let union = realize_union(&specs)?;
    let cache = EvalCache::with_limit(code.clone(), args.cache_limit);
    let value = grundy(&union, &code, &cache)?;
    let outcome = Outcome::from_value(value);
    let wins = winning_moves(&union, &code, &cache)?;
    let rendered: Vec<(VertexSet, String)> = wins
        .iter()
        .map(|m| {
            let rest = union
                .remove_vertices(&m.removed)
                .expect("winning moves target existing vertices");
            (m.removed.clone(), describe(&rest))
        })
        .collect();

    if args.json {
        let doc = serde_json::json!({
            "graph": specs.iter().map(GraphSpec::to_string).collect::<Vec<_>>(),
            "code": code.to_string(),
            "value": value,
            "outcome": outcome,
            "winning_moves": rendered
                .iter()
                .map(|(removed, result)| serde_json::json!({
                    "remove": removed.as_slice(),
                    "result": result,
                }))
                .collect::<Vec<_>>(),
        });
        println!("{doc}");
    } else {
        println!("graph: {}", specs_label(&specs));
        println!("code: {code}");
        println!("value: {value}");
        println!("outcome: {outcome}");
        if rendered.is_empty() {
            println!("winning moves: none (P-position)");
        } else {
            println!("winning moves:");
            for (removed, result) in &rendered {
                println!("  remove {removed} -> {result}");
            }
        }
    }
    Ok(0)
}

/// A compact structural description of a position: named families when the
/// shape is recognizable (`path:n`, `cycle:n`, `star:...`, `bistar:...`),
/// `tree:n`/`graph:n` otherwise, components joined with ` + `.
fn describe(g: &Graph) -> String {
    if g.vertex_count() == 0 {
        return "empty".to_string();
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return comps
            .iter()
            .map(|c| describe_connected(&g.induced(c)))
            .collect::<Vec<_>>()
            .join(" + ");
    }
    describe_connected(g)
}

fn describe_connected(g: &Graph) -> String {
    let n = g.vertex_count();
    if !g.is_forest() {
        if (0..n).all(|v| g.degree(v) == 2) {
            return format!("cycle:{n}");
        }
        return format!("graph:{n}");
    }
    let branches: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    match branches.as_slice() {
        [] => format!("path:{n}"),
        [center] => {
            let arms: Vec<usize> = g
                .neighbors(*center)
                .iter()
                .map(|&u| walk_arm(g, *center, u).len())
                .collect();
            StarSpec::from_arms(arms).to_string()
        }
        [c1, c2] => {
            let (beyond, middle) = split_at_two_branches(g, *c1, *c2);
            let left: Vec<usize> = beyond[0].iter().map(Vec::len).collect();
            let right: Vec<usize> = beyond[1].iter().map(Vec::len).collect();
            BistarSpec::new(
                StarSpec::from_arms(left),
                middle,
                StarSpec::from_arms(right),
            )
            .to_string()
        }
        _ => format!("tree:{n}"),
    }
}

/// The path walked from branch vertex `from` into its neighbor `first`,
/// until a leaf; valid when no other branch vertex lies on the way.
fn walk_arm(g: &Graph, from: usize, first: usize) -> Vec<usize> {
    let mut arm = vec![first];
    let (mut prev, mut cur) = (from, first);
    while let Some(&next) = g.neighbors(cur).iter().find(|&&u| u != prev) {
        arm.push(next);
        prev = cur;
        cur = next;
    }
    arm
}

/// For a tree with exactly two branch vertices: the arms hanging off each
/// (as vertex walks), and the edge length of the path between them.
fn split_at_two_branches(g: &Graph, c1: usize, c2: usize) -> ([Vec<Vec<usize>>; 2], usize) {
    let mut arms = [Vec::new(), Vec::new()];
    let mut middle = 0;
    for (i, c, other) in [(0usize, c1, c2), (1, c2, c1)] {
        for &u in g.neighbors(c) {
            let walk = walk_arm(g, c, u);
            if walk.contains(&other) {
                // The connecting path: count its edges once, from one side.
                if i == 0 {
                    middle = walk.iter().position(|&v| v == other).unwrap() + 1;
                }
            } else {
                arms[i].push(walk);
            }
        }
    }
    (arms, middle)
}

// ---------------------------------------------------------------------------
// star-table
// ---------------------------------------------------------------------------

fn cmd_star_table(args: StarTableArgs) -> Result<i32> {
    let k_max = args.rows;
    let j_cap = args.cols.unwrap_or(k_max).min(k_max);
    let table = star_table(k_max + 1);
    let clipped: Vec<&[u32]> = table
        .iter()
        .enumerate()
        .map(|(k, row)| &row[..=k.min(j_cap)])
        .collect();

    if args.json {
        let doc = serde_json::json!({
            "rows": k_max,
            "cols": j_cap,
            "table": clipped,
        });
        println!("{doc}");
        return Ok(0);
    }
    match args.format {
        TableFormat::Text => {
            let k_width = k_max.to_string().len().max(3);
            let mut header = format!("{:>k_width$}", "k\\j");
            for j in 0..=j_cap {
                header.push_str(&format!("{j:>4}"));
            }
            println!("{header}");
            for (k, row) in clipped.iter().enumerate() {
                let mut line = format!("{k:>k_width$}");
                for v in *row {
                    line.push_str(&format!("{v:>4}"));
                }
                println!("{line}");
            }
        }
        TableFormat::Csv => {
            let mut header = "k".to_string();
            for j in 0..=j_cap {
                header.push_str(&format!(",{j}"));
            }
            println!("{header}");
            for (k, row) in clipped.iter().enumerate() {
                let mut line = k.to_string();
                for j in 0..=j_cap {
                    match row.get(j) {
                        Some(v) => line.push_str(&format!(",{v}")),
                        None => line.push(','),
                    }
                }
                println!("{line}");
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// sequence
// ---------------------------------------------------------------------------

fn cmd_sequence(args: SequenceArgs) -> Result<i32> {
    let code = parse_code(&args.code)?;
    let seq = grundy_sequence(&code, args.max);
    let period = if args.detect_period {
        Some(detect_period(&seq))
    } else {
        None
    };

    if args.json {
        let mut doc = serde_json::json!({
            "code": code.to_string(),
            "max": args.max,
            "values": seq,
        });
        if let Some(found) = period {
            doc["period"] = match found {
                Some((preperiod, period)) => serde_json::json!({
                    "preperiod": preperiod,
                    "period": period,
                }),
                None => serde_json::Value::Null,
            };
        }
        println!("{doc}");
    } else {
        println!("code: {code}");
        println!(
            "values: {}",
            seq.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        );
        if let Some(found) = period {
            match found {
                Some((preperiod, period)) => {
                    println!("period: preperiod {preperiod}, period {period}");
                }
                None => println!("period: none detected within this range"),
            }
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify / search
// ---------------------------------------------------------------------------

fn cmd_verify(suite: VerifySuite) -> Result<i32> {
    let (report, json) = match suite {
        VerifySuite::Paths { max, json } => (verify_paths_cycles(max)?, json),
        VerifySuite::Stars { max_arms, json } => (verify_star_table(max_arms)?, json),
        VerifySuite::Bistars { max_arms, max_len, max_middle, json } => {
            (verify_bistars(max_arms, max_len, max_middle)?, json)
        }
        VerifySuite::Counterexample { json } => (verify_counterexample()?, json),
        VerifySuite::Caterpillar { json } => (verify_caterpillar()?, json),
        VerifySuite::HeapPath { max, json } => (verify_heap_path(max)?, json),
    };
    print_report(&report, json);
    Ok(if report.passed() { 0 } else { 1 })
}

/// Render a suite report. Run-dependent measurements (elapsed time, cache
/// hit/miss counters) are deliberately omitted: output must be
/// byte-deterministic for fixed inputs and flags.
fn print_report(report: &VerificationReport, json: bool) {
    let result = if report.passed() { "pass" } else { "fail" };
    if json {
        let doc = serde_json::json!({
            "suite": report.suite,
            "cases": report.cases,
            "cache_entries": report.cache_entries,
            "notes": report.notes,
            "failures": report.failures,
            "result": result,
        });
        println!("{doc}");
        return;
    }
    println!("suite: {}", report.suite);
    println!("cases: {}", report.cases);
    println!("cache entries: {}", report.cache_entries);
    for note in &report.notes {
        println!("note: {note}");
    }
    println!("failures: {}", report.failures.len());
    const SHOWN: usize = 20;
    for f in report.failures.iter().take(SHOWN) {
        println!("  {}: expected {}, got {}", f.input, f.expected, f.actual);
    }
    if report.failures.len() > SHOWN {
        println!("  ... and {} more", report.failures.len() - SHOWN);
    }
    println!("result: {result}");
}

fn cmd_search_caterpillars(
    spine_max: usize,
    target: u32,
    cache_limit: usize,
    json: bool,
) -> Result<i32> {
    let report = search_caterpillars(spine_max, target, cache_limit)?;
    if json {
        let doc = serde_json::json!({
            "search": "caterpillars",
            "spine_max": report.spine_max,
            "target": report.target,
            "examined": report.examined,
            "matches": report
                .matches
                .iter()
                .map(|h| serde_json::json!({
                    "spec": h.spec.to_string(),
                    "value": h.grundy,
                }))
                .collect::<Vec<_>>(),
            "best": report.best.as_ref().map(|h| serde_json::json!({
                "spec": h.spec.to_string(),
                "value": h.grundy,
            })),
            "skipped": report.skipped,
        });
        println!("{doc}");
        return Ok(0);
    }
    println!("search: caterpillars");
    println!("spine max: {}", report.spine_max);
    println!("target: {}", report.target);
    println!("examined: {}", report.examined);
    println!("matches: {}", report.matches.len());
    for hit in &report.matches {
        println!("  {}", hit.spec);
    }
    match &report.best {
        Some(hit) => println!("best: {} value {}", hit.spec, hit.grundy),
        None => println!("best: none"),
    }
    println!("skipped: {}", report.skipped.len());
    for name in &report.skipped {
        println!("  {name}");
    }
    Ok(0)
}

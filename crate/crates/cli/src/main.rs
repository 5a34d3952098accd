use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use flowsg::check::{check_parsed, CheckCase, CheckOptions};
use flowsg::descriptor::identify_concrete;
use flowsg::oracle::collapsing_membership;
use flowsg::report::{admissible_defects, analyze, complexity_section, render_complexity, render_text, OracleSummary};
use flowsg::{parse_graph, Error, FlowSemigroup, ParsedGraph, Transformation};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "flowsg", version, about = "Defect groups and complexity bounds of graph flow semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural defect groups and complexity bounds (no enumeration)
    Analyze(AnalyzeArgs),
    /// Enumerate the flow semigroup and extract one defect group
    Oracle(OracleArgs),
    /// Compare structural answers with the oracle for every defect
    Check(CheckArgs),
    /// Decide whether e_ab lies in the flow semigroup of a digraph
    Membership(MembershipArgs),
    /// Complexity value or bounds
    Complexity(ComplexityArgs),
}

#[derive(Args, Debug)]
struct OutputFormat {
    /// Print the JSON report
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print plain text (default)
    #[arg(long)]
    text: bool,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Defect size to analyse
    #[arg(long, conflicts_with = "all_defects")]
    defect: Option<usize>,
    /// Analyse every admissible defect (default)
    #[arg(long)]
    all_defects: bool,
    #[command(flatten)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct OracleArgs {
    file: PathBuf,
    /// Defect size; the defect set defaults to the first k vertices
    #[arg(long, required_unless_present = "defect_set")]
    defect: Option<usize>,
    /// Comma-separated defect set labels
    #[arg(long, value_delimiter = ',')]
    defect_set: Option<Vec<String>>,
    /// Largest semigroup the oracle may enumerate
    #[arg(long, env = "FLOWSG_ORACLE_CAP", default_value_t = flowsg::DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[command(flatten)]
    format: OutputFormat,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Single graph file
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    file: Option<PathBuf>,
    /// Directory of graph files, checked in parallel
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Skip graphs with more vertices than this
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Also compare the groups of every defect set of each size
    #[arg(long)]
    all_defect_sets: bool,
    #[arg(long, env = "FLOWSG_ORACLE_CAP", default_value_t = flowsg::DEFAULT_ORACLE_CAP)]
    cap: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct MembershipArgs {
    file: PathBuf,
    a: String,
    b: String,
}

#[derive(Args, Debug)]
struct ComplexityArgs {
    file: PathBuf,
    #[command(flatten)]
    format: OutputFormat,
}

fn load(path: &Path) -> Result<ParsedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn elapsed_ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode> {
    let start = Instant::now();
    let g = load(&args.file)?;
    let defects = match args.defect {
        Some(k) => vec![k],
        None => admissible_defects(&g),
    };
    let mut report = analyze(&g, &defects)?;
    if args.format.json {
        report.timing_ms = Some(elapsed_ms(start));
        print_json(&report)?;
    } else {
        print!("{}", render_text(&report));
    }
    Ok(ExitCode::SUCCESS)
}

fn labels_of(g: &ParsedGraph) -> Vec<String> {
    match g {
        ParsedGraph::Graph(g) => g.labels().map(String::from).collect(),
        ParsedGraph::Digraph(d) => d.labels().map(String::from).collect(),
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let start = Instant::now();
    let g = load(&args.file)?;
    let labels = labels_of(&g);
    let defect: Vec<usize> = match (&args.defect_set, args.defect) {
        (Some(set), k) => {
            if k.is_some_and(|k| k != set.len()) {
                bail!("--defect {} disagrees with a defect set of {} vertices", k.unwrap(), set.len());
            }
            set.iter()
                .map(|l| labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownVertex(l.clone())))
                .collect::<Result<_, _>>()?
        }
        (None, Some(k)) => default_defect_set(&g, k)?,
        (None, None) => unreachable!("clap requires one of them"),
    };
    let semigroup = match &g {
        ParsedGraph::Graph(g) => {
            if !g.is_connected() {
                return Err(Error::Disconnected.into());
            }
            FlowSemigroup::enumerate(g, args.cap)?
        }
        ParsedGraph::Digraph(d) => FlowSemigroup::enumerate(d, args.cap)?,
    };
    let group = semigroup.defect_group(&defect)?;
    let summary = OracleSummary {
        k: defect.len(),
        defect_set: defect.iter().map(|&v| labels[v].clone()).collect(),
        semigroup_size: semigroup.len(),
        group: identify_concrete(&group),
    };
    if args.format.json {
        #[derive(Serialize)]
        struct Out<'a> {
            oracle: &'a OracleSummary,
            timing_ms: f64,
        }
        print_json(&Out { oracle: &summary, timing_ms: elapsed_ms(start) })?;
    } else {
        println!("|S| = {}", summary.semigroup_size);
        println!("defect set {{{}}}", summary.defect_set.join(","));
        println!("order {}", summary.group.order);
        println!("orbit sizes {:?}", summary.group.orbit_sizes());
        for o in &summary.group.orbits {
            println!("  {{{}}}: {} (induced order {})", o.points.join(","), o.label(), o.induced_order);
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// First `k` vertices for a graph; first `k` of every nontrivial strongly
/// connected component for a digraph, matching the structural per-component
/// defect.
fn default_defect_set(g: &ParsedGraph, k: usize) -> Result<Vec<usize>> {
    match g {
        ParsedGraph::Graph(g) => {
            if k == 0 || k >= g.len() {
                return Err(Error::InvalidDefect { k, n: g.len() }.into());
            }
            Ok((0..k).collect())
        }
        ParsedGraph::Digraph(d) => {
            if !admissible_defects(g).contains(&k) {
                return Err(Error::InvalidDefect { k, n: d.len() }.into());
            }
            let mut set: Vec<usize> = d
                .strongly_connected_components()
                .components
                .iter()
                .filter(|c| c.len() > 1)
                .flat_map(|c| c[..k].to_vec())
                .collect();
            set.sort_unstable();
            Ok(set)
        }
    }
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    #[serde(flatten)]
    case: CheckCase,
    passed: bool,
}

fn graph_size(g: &ParsedGraph) -> usize {
    match g {
        ParsedGraph::Graph(g) => g.len(),
        ParsedGraph::Digraph(d) => d.len(),
    }
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode> {
    let files: Vec<PathBuf> = match (&args.file, &args.corpus) {
        (Some(f), _) => vec![f.clone()],
        (None, Some(dir)) => {
            let mut files: Vec<PathBuf> = fs::read_dir(dir)
                .with_context(|| format!("reading {}", dir.display()))?
                .map(|e| e.map(|e| e.path()))
                .collect::<std::io::Result<_>>()?;
            files.retain(|p| p.is_file());
            files.sort();
            files
        }
        (None, None) => unreachable!("clap requires one of them"),
    };
    let graphs: Vec<(String, ParsedGraph)> = files
        .iter()
        .map(|p| {
            let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            load(p).map(|g| (name, g))
        })
        .collect::<Result<_>>()?;

    let opts = CheckOptions { cap: args.cap, all_defect_sets: args.all_defect_sets, minimize: true };
    let results: Vec<(String, Option<Result<Vec<CheckCase>, Error>>)> = graphs
        .par_iter()
        .map(|(name, g)| {
            let outcome = (graph_size(g) <= args.max_n).then(|| check_parsed(g, opts));
            (name.clone(), outcome)
        })
        .collect();

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (name, outcome) in results {
        match outcome {
            None => skipped.push(name),
            Some(Err(e)) => return Err(anyhow::Error::new(e).context(format!("checking {name}"))),
            Some(Ok(cases)) => {
                rows.extend(cases.into_iter().map(|case| CheckRow { name: name.clone(), passed: case.passed(), case }))
            }
        }
    }
    let failures = rows.iter().filter(|r| !r.passed).count();
    if args.json {
        print_json(&rows)?;
    } else {
        for r in &rows {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            println!(
                "{verdict} {} k={} structural={} oracle_order={} orbits={:?}",
                r.name, r.case.k, r.case.structural, r.case.report.group_order, r.case.report.orbit_sizes
            );
            if let Some(reason) = &r.case.report.reason {
                println!("  {reason}");
            }
            for set in &r.case.defect_set_violations {
                println!("  defect set {{{}}} gives a different group", set.join(","));
            }
            if let Some(cx) = &r.case.counterexample {
                println!("  minimized counterexample:");
                for line in cx.lines() {
                    println!("    {line}");
                }
            }
        }
        for name in &skipped {
            println!("SKIP {name} (more than {} vertices)", args.max_n);
        }
        println!("{} cases, {} failed", rows.len(), failures);
    }
    Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(EXIT_MISMATCH) })
}

fn cmd_membership(args: MembershipArgs) -> Result<ExitCode> {
    let d = match load(&args.file)? {
        ParsedGraph::Digraph(d) => d,
        ParsedGraph::Graph(g) => g.to_digraph(),
    };
    let a = d.index_of(&args.a)?;
    let b = d.index_of(&args.b)?;
    let m = collapsing_membership(&d, a, b)?;
    let label = |v: usize| d.label(v).to_string();
    if !m.member {
        println!("e({},{}) is not a member", args.a, args.b);
        return Ok(ExitCode::SUCCESS);
    }
    let rule = match m.rule {
        flowsg::oracle::MembershipRule::Edge => "edge",
        _ => "reversed edge on a directed cycle",
    };
    println!("e({},{}) is a member ({rule})", args.a, args.b);
    if let Some(w) = &m.witness {
        println!("witness: {}", w.render(label));
        let expected = Transformation::collapsing(d.len(), a, b);
        if w.evaluate(d.len()) != expected {
            println!("witness does not evaluate to e({},{})", args.a, args.b);
            return Ok(ExitCode::from(EXIT_MISMATCH));
        }
        println!("witness verified");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_complexity(args: ComplexityArgs) -> Result<ExitCode> {
    let g = load(&args.file)?;
    let section = complexity_section(&g)?;
    if args.format.json {
        print_json(&section)?;
    } else {
        print!("{}", render_complexity(&section));
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Check(a) => cmd_check(a),
        Command::Membership(a) => cmd_membership(a),
        Command::Complexity(a) => cmd_complexity(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let cap = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::OracleTooLarge { .. })));
            ExitCode::from(if cap { EXIT_CAP } else { EXIT_USAGE })
        }
    }
}

//! `idcodes`: generate graphs, solve and check codes, enumerate, convert,
//! and run the verification sweeps.
//!
//! Exit status: 0 on success, 1 when a claim has a counterexample or a
//! checked code is invalid, 2 on usage or input errors.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use idcode_core::families::{self, FamilySpec, TreeOp};
use idcode_core::io::{
    parse_edge_list, parse_graph6, parse_graph6_lines, write_edge_list, write_graph6,
};
use idcode_core::solver::{all_minimum_codes, minimum_code, minimum_code_oracle, Outcome};
use idcode_core::stream::{parse_graphs, Filters, GraphStream};
use idcode_core::{
    enumerate_connected, enumerate_trees, run_claim, violation_witness, ClaimId, CodeKind, Graph,
    VertexSet,
};

#[derive(Parser)]
#[command(
    name = "idcodes",
    version,
    about = "Identifying-type codes in small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a member of a named family.
    Gen(GenArgs),
    /// Minimum code of a kind for every input graph.
    Solve(SolveArgs),
    /// Validate a given vertex set as a code.
    Check(CheckArgs),
    /// Enumerate connected graphs or free trees up to isomorphism.
    Enum(EnumArgs),
    /// Run a verification sweep for one claim.
    Verify(VerifyArgs),
    /// Convert between graph formats.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "a_k")]
    AK,
    #[value(name = "calA")]
    CalA,
    ExtremalTid,
    Corona,
    Path,
    Cycle,
    Star,
    Complete,
    CompleteMinusMatching,
    SubdividedStar,
    LdGap,
    SidGap,
    EidGap,
    #[value(name = "calT")]
    CalT,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Family parameter k.
    #[arg(long)]
    k: Option<usize>,
    /// Order, for path, cycle, star, complete and complete-minus-matching.
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated partition, for calA and extremal-tid.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Add the universal vertex (calA, extremal-tid).
    #[arg(long)]
    universal: bool,
    /// Clique size for extremal-tid.
    #[arg(long)]
    m: Option<usize>,
    /// Path length hung from every vertex, for corona.
    #[arg(long)]
    t: Option<usize>,
    /// Base graph in graph6, for corona.
    #[arg(long)]
    base: Option<String>,
    /// Comma-separated operations such as phi2@3, for calT.
    #[arg(long, value_delimiter = ',')]
    ops: Vec<String>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    code: CodeKind,
    /// Input file (graph6 lines or one edge list); `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// List every minimum code.
    #[arg(long)]
    all_optima: bool,
    /// Use the exhaustive solver.
    #[arg(long)]
    oracle: bool,
    /// Output is always JSON; accepted for symmetry with other tools.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    code: CodeKind,
    /// Comma-separated 0-based vertices.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    set: Vec<usize>,
    #[arg(long = "in", default_value = "-")]
    input: String,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long, conflicts_with = "trees", required_unless_present = "trees")]
    connected: bool,
    #[arg(long)]
    trees: bool,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    twin_free: bool,
    #[arg(long)]
    min_girth: Option<usize>,
    #[arg(long)]
    identifiable: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: ClaimId,
    /// Largest order swept (gadget parameter for prop-4.5/4.6/4.7).
    #[arg(long)]
    max_n: Option<usize>,
    /// graph6 file replacing the builtin enumeration.
    #[arg(long)]
    source: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, env = "IDCODES_JOBS")]
    jobs: Option<usize>,
    /// girth5-search: accept gamma_t = floor(3n/4) instead of exactly 3n/4.
    #[arg(long)]
    relaxed: bool,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: InputFormat,
    #[arg(long, value_enum)]
    to: Format,
    #[arg(long = "in", default_value = "-")]
    input: String,
}

/// Failures that map to exit status 1 rather than 2.
#[derive(Debug)]
struct Negative;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative)) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Result<(), Negative>> {
    match command {
        Command::Gen(a) => gen(a, out).map(Ok),
        Command::Solve(a) => solve(a, out).map(Ok),
        Command::Check(a) => check(a, out),
        Command::Enum(a) => enumerate(a, out).map(Ok),
        Command::Verify(a) => verify(a, out),
        Command::Convert(a) => convert(a, out).map(Ok),
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.n(), "edges": edges })
}

fn emit(g: &Graph, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Graph6 => writeln!(out, "{}", write_graph6(g))?,
        Format::Edgelist => write!(out, "{}", write_edge_list(g))?,
        Format::Json => writeln!(out, "{}", graph_json(g))?,
    }
    Ok(())
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| anyhow!("--{flag} is required for family {family}"))
}

fn gen(a: GenArgs, out: &mut impl Write) -> Result<()> {
    let spec = match a.family {
        Family::AK => FamilySpec::AK(need(a.k, "k", "a_k")?),
        Family::CalA => FamilySpec::CalA {
            partition: a.parts,
            with_universal: a.universal,
        },
        Family::ExtremalTid => FamilySpec::ExtremalTid {
            partition: a.parts,
            with_universal: a.universal,
            m: need(a.m, "m", "extremal-tid")?,
        },
        Family::Corona => FamilySpec::Corona {
            base: parse_graph6(
                a.base
                    .as_deref()
                    .ok_or_else(|| anyhow!("--base is required for family corona"))?,
            )?,
            t: need(a.t, "t", "corona")?,
        },
        Family::Path => FamilySpec::Path(need(a.n, "n", "path")?),
        Family::Cycle => FamilySpec::Cycle(need(a.n, "n", "cycle")?),
        Family::Star => FamilySpec::Star(need(a.n, "n", "star")?),
        Family::Complete => FamilySpec::Complete(need(a.n, "n", "complete")?),
        Family::CompleteMinusMatching => {
            FamilySpec::CompleteMinusMatching(need(a.n, "n", "complete-minus-matching")?)
        }
        Family::SubdividedStar => FamilySpec::SubdividedStar(need(a.k, "k", "subdivided-star")?),
        Family::LdGap => FamilySpec::LdGap(need(a.k, "k", "ld-gap")?),
        Family::SidGap => FamilySpec::SidGap(need(a.k, "k", "sid-gap")?),
        Family::EidGap => FamilySpec::EidGap(need(a.k, "k", "eid-gap")?),
        Family::CalT => {
            let ops = a
                .ops
                .iter()
                .map(|s| s.parse::<TreeOp>())
                .collect::<Result<Vec<_>, _>>()?;
            if let Format::Json = a.format {
                let t = families::cal_t(&ops)?;
                let status: String = t.status.iter().map(|s| s.letter()).collect();
                let mut v = graph_json(&t.tree);
                v["status"] = json!(status);
                writeln!(out, "{v}")?;
                return Ok(());
            }
            FamilySpec::CalT(ops)
        }
    };
    emit(&spec.build()?, a.format, out)
}

fn vertices(set: &VertexSet) -> Vec<usize> {
    set.to_vec()
}

fn solve(a: SolveArgs, out: &mut impl Write) -> Result<()> {
    let graphs = parse_graphs(&read_input(&a.input)?)?;
    for g in &graphs {
        let result = if a.oracle {
            minimum_code_oracle(g, a.code)?
        } else {
            minimum_code(g, a.code)?
        };
        let mut v = json!({ "code": a.code.name(), "graph6": write_graph6(g), "n": g.n() });
        match &result.outcome {
            Outcome::Optimal(c) => {
                v["status"] = json!("optimal");
                v["size"] = json!(c.len());
                v["witness"] = json!(vertices(c));
                if a.all_optima {
                    let all: Vec<Vec<usize>> =
                        all_minimum_codes(g, a.code)?.iter().map(vertices).collect();
                    v["optima"] = json!(all);
                }
            }
            Outcome::Infeasible(reason) => {
                v["status"] = json!("infeasible");
                v["reason"] = json!(reason.to_string());
            }
        }
        writeln!(out, "{v}")?;
    }
    Ok(())
}

fn check(a: CheckArgs, out: &mut impl Write) -> Result<Result<(), Negative>> {
    let graphs = parse_graphs(&read_input(&a.input)?)?;
    let mut all_valid = true;
    for g in &graphs {
        if let Some(&v) = a.set.iter().find(|&&v| v >= g.n()) {
            bail!(
                "vertex {v} is out of range for a graph on {} vertices",
                g.n()
            );
        }
        let code = VertexSet::from_vertices(g.n(), a.set.iter().copied());
        let violation = violation_witness(g, a.code, &code);
        all_valid &= violation.is_none();
        let v = json!({
            "code": a.code.name(),
            "graph6": write_graph6(g),
            "set": vertices(&code),
            "valid": violation.is_none(),
            "violation": violation.map(|x| x.to_string()),
        });
        writeln!(out, "{v}")?;
    }
    Ok(if all_valid { Ok(()) } else { Err(Negative) })
}

fn enumerate(a: EnumArgs, out: &mut impl Write) -> Result<()> {
    let graphs = if a.trees {
        enumerate_trees(a.n)?
    } else {
        enumerate_connected(a.n)?
    };
    let filters = Filters {
        identifiable: a.identifiable,
        twin_free: a.twin_free,
        min_girth: a.min_girth,
        ..Filters::default()
    };
    for g in graphs.iter().filter(|g| filters.accepts(g)) {
        emit(g, a.format, out)?;
    }
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut impl Write) -> Result<Result<(), Negative>> {
    if let Some(jobs) = a.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("configuring worker pool")?;
    }
    let source = a
        .source
        .as_deref()
        .map(GraphStream::from_file)
        .transpose()?;
    let report = if a.claim == ClaimId::Girth5Search && a.relaxed {
        let stream = source.unwrap_or_else(|| GraphStream::connected(1..=a.max_n.unwrap_or(8)));
        let stream = match a.max_n {
            Some(m) => stream.max_n(m),
            None => stream,
        };
        idcode_core::verify::search_girth5_tight(&stream.min_girth(5).twin_free(), true)?
    } else {
        run_claim(a.claim, a.max_n, source)?
    };
    writeln!(out, "{}", report.to_json())?;
    Ok(if report.passed() {
        Ok(())
    } else {
        Err(Negative)
    })
}

fn convert(a: ConvertArgs, out: &mut impl Write) -> Result<()> {
    let text = read_input(&a.input)?;
    let graphs = match a.from {
        InputFormat::Graph6 => parse_graph6_lines(&text)?,
        InputFormat::Edgelist => vec![parse_edge_list(&text)?],
    };
    for g in &graphs {
        emit(g, a.to, out)?;
    }
    Ok(())
}

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use ntd_core::edge_list::parse_edge_list_documents;
use ntd_core::families::{build_member, recognize_t, spanning_trees, TSpec};
use ntd_core::harness::{named_exceptional_graphs, verify, Theorem, VerifyOptions};
use ntd_core::solve::{solve_with, SolveOptions};
use ntd_core::{
    canonical_tree_code, enumerate_trees, parse_edge_list, to_edge_list, Graph, Method, ParamKind,
    SolveError,
};
use serde_json::json;

/// Exact neighborhood total domination and the trees that maximize it.
#[derive(Debug, Parser)]
#[command(name = "ntd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve every graph in an edge-list file (JSON per graph on stdout).
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "gamma-nt")]
        param: ParamKind,
        #[arg(long, default_value = "bnb")]
        method: Method,
        /// Time limit in seconds for each graph.
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Run an exhaustive check and print a JSON report.
    Verify {
        /// even, odd, half-bound, chain, bgraphs or spanning
        #[arg(long)]
        theorem: Theorem,
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Write every tree of order N as blank-line-separated edge lists.
    EnumerateTrees {
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build or recognize members of the extremal tree family.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Solve the exceptional graphs B1..B5 and C5.
    Bgraphs,
    /// Check that every spanning tree of a graph (default: B1..B5) is in the family.
    SpanningCheck { file: Option<PathBuf> },
}

#[derive(Debug, Subcommand)]
enum FamilyCommand {
    /// Build the tree described by a JSON spec.
    Build {
        spec: PathBuf,
        /// Also write the bare edge list here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a membership certificate, or "reject".
    Recognize { file: PathBuf },
}

/// An error paired with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn new(code: u8, error: impl Into<anyhow::Error>) -> Self {
        Failure {
            code,
            error: error.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 1, error }
    }
}

impl From<io::Error> for Failure {
    fn from(error: io::Error) -> Self {
        Failure {
            code: 1,
            error: error.into(),
        }
    }
}

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            file,
            param,
            method,
            budget,
        } => cmd_solve(&file, param, method, budget),
        Command::Verify {
            theorem,
            max_order,
            parallel,
        } => cmd_verify(theorem, max_order, parallel),
        Command::EnumerateTrees { n, output } => cmd_enumerate(n, output.as_deref()),
        Command::Family { command } => match command {
            FamilyCommand::Build { spec, output } => cmd_build(&spec, output.as_deref()),
            FamilyCommand::Recognize { file } => cmd_recognize(&file),
        },
        Command::Bgraphs => cmd_bgraphs(),
        Command::SpanningCheck { file } => cmd_spanning(file.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PARSE, e))
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>, Failure> {
    let text = read(path)?;
    parse_edge_list_documents(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PARSE, e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read(path)?;
    parse_edge_list(&text)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(|e| Failure::new(EXIT_PARSE, e))
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(anyhow::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn cmd_solve(
    file: &Path,
    param: ParamKind,
    method: Method,
    budget: Option<f64>,
) -> Result<u8, Failure> {
    let budget = budget
        .map(Duration::try_from_secs_f64)
        .transpose()
        .map_err(|e| Failure::new(EXIT_PARSE, anyhow!("invalid budget: {e}")))?;
    let opts = SolveOptions { method, budget };
    let graphs = read_graphs(file)?;
    let mut code = 0;
    for (i, g) in graphs.iter().enumerate() {
        match solve_with(g, param, &opts) {
            Ok(result) => print_json(&result)?,
            Err(SolveError::BudgetExhausted { best, nodes }) => {
                eprintln!("graph {i}: budget exhausted after {nodes} nodes");
                print_json(&json!({
                    "kind": param,
                    "budget_exhausted": true,
                    "upper_bound": best.len(),
                    "witness": best,
                    "nodes_explored": nodes,
                }))?;
                code = code.max(EXIT_BUDGET);
            }
            Err(e) => {
                let code = if e.is_precondition() || matches!(e, SolveError::Unsatisfiable { .. }) {
                    EXIT_PRECONDITION
                } else {
                    1
                };
                return Err(Failure::new(code, anyhow!("graph {i}: {e}")));
            }
        }
    }
    Ok(code)
}

fn cmd_verify(theorem: Theorem, max_order: usize, parallel: usize) -> Result<u8, Failure> {
    let report = verify(
        theorem,
        &VerifyOptions {
            max_order,
            parallelism: parallel,
        },
    )
    .map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
    print_json(&report)?;
    if !report.passed {
        eprintln!("{} mismatches", report.totals.mismatches);
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_enumerate(n: usize, output: Option<&Path>) -> Result<u8, Failure> {
    let trees = enumerate_trees(n).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
    let mut text = String::new();
    let mut count = 0usize;
    for tree in trees {
        if count > 0 {
            text.push('\n');
        }
        text.push_str(&to_edge_list(&tree));
        count += 1;
    }
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            println!("{count}");
        }
        None => {
            io::stdout().lock().write_all(text.as_bytes())?;
            eprintln!("{count}");
        }
    }
    Ok(0)
}

fn cmd_build(spec_path: &Path, output: Option<&Path>) -> Result<u8, Failure> {
    let spec: TSpec = serde_json::from_str(&read(spec_path)?)
        .with_context(|| format!("parsing {}", spec_path.display()))
        .map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let (tree, cert) = build_member(&spec).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
    let edge_list = to_edge_list(&tree);
    if let Some(path) = output {
        fs::write(path, &edge_list).with_context(|| format!("writing {}", path.display()))?;
    }
    print_json(&json!({ "edge_list": edge_list, "certificate": cert }))?;
    Ok(0)
}

fn cmd_recognize(file: &Path) -> Result<u8, Failure> {
    let tree = read_graph(file)?;
    match recognize_t(&tree).map_err(|e| Failure::new(EXIT_PRECONDITION, e))? {
        Some(cert) => {
            print_json(&cert)?;
            Ok(0)
        }
        None => {
            println!("reject");
            Ok(1)
        }
    }
}

fn cmd_bgraphs() -> Result<u8, Failure> {
    let report =
        verify(Theorem::Bgraphs, &VerifyOptions::default()).map_err(|e| Failure::new(1, e))?;
    let graphs: Vec<_> = named_exceptional_graphs()
        .into_iter()
        .zip(&report.rows)
        .map(|((label, g), row)| {
            json!({
                "label": label,
                "order": g.order(),
                "size": g.size(),
                "edges": g.edges(),
                "passed": row.passed(),
            })
        })
        .collect();
    print_json(&json!({ "graphs": graphs, "report": report }))?;
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_spanning(file: Option<&Path>) -> Result<u8, Failure> {
    let Some(path) = file else {
        let report = verify(Theorem::SpanningCorollary, &VerifyOptions::default())
            .map_err(|e| Failure::new(1, e))?;
        print_json(&report)?;
        return Ok(if report.passed { 0 } else { 1 });
    };
    let g = read_graph(path)?;
    let trees = spanning_trees(&g).map_err(|e| Failure::new(EXIT_PRECONDITION, e))?;
    let mut rejected = Vec::new();
    for tree in &trees {
        let accepted = recognize_t(tree)
            .map_err(|e| Failure::new(EXIT_PRECONDITION, e))?
            .is_some();
        if !accepted {
            let code = canonical_tree_code(tree).expect("spanning trees are trees");
            rejected.push(String::from_utf8(code).expect("code is ASCII"));
        }
    }
    print_json(&json!({
        "order": g.order(),
        "classes": trees.len(),
        "accepted": trees.len() - rejected.len(),
        "rejected": rejected,
    }))?;
    Ok(if rejected.is_empty() { 0 } else { 1 })
}

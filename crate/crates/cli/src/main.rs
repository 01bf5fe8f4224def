//! Command-line front end.
//!
//! Data goes to stdout (or `--output`), diagnostics to stderr. Exit codes:
//! 0 success, 1 verification failed, 2 usage or input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use cyclotour::experiments::gap_table_csv;
use cyclotour::search::DEFAULT_BUDGET;
use cyclotour::{
    branch_bound_max, certify_bound, counterexample_digraph, cyclic_tournament, gap_table,
    read_digraph, split_experiment, verify_subset_bound, write_digraph, Digraph, SearchConfig,
    VertexSet,
};

#[derive(Debug, Parser)]
#[command(name = "cyclotour", version, about = "Cyclic tournaments and min out-degree splitting")]
struct Cli {
    /// Write data output to this file instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print T_k (or D_k) in the text digraph format.
    Generate {
        #[arg(long)]
        k: u32,
        /// Delete vertex 0, giving D_k.
        #[arg(long)]
        delete_vertex: bool,
    },
    /// Exhaustively check the subset bound on T_k.
    Verify {
        #[arg(long)]
        k: u32,
        /// Maximum number of subsets to visit.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        threads: u16,
    },
    /// Certify an upper bound for the minimum out-degree of T_k[X].
    Certify {
        #[arg(long)]
        k: u32,
        /// Comma-separated vertex ids; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Maximise the minimum out-degree over subsets of a fixed size.
    Search {
        /// Digraph file, or `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        size: usize,
    },
    /// Random balanced splits, as CSV.
    Split {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact gap table for k = 1..=kmax, as CSV.
    Table {
        #[arg(long)]
        kmax: u32,
        /// Append unit-constant reference curves (shape only).
        #[arg(long)]
        reference: bool,
    },
}

enum Status {
    Ok,
    Failed,
}

fn read_input(path: &PathBuf) -> Result<Digraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    read_digraph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_set(k: u32, text: &str) -> Result<VertexSet> {
    let order = cyclotour::construction::pow3(k)? as usize;
    let ids = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().with_context(|| format!("bad vertex id {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(VertexSet::from_ids(order, ids)?)
}

fn run(cli: Cli, out: &mut String) -> Result<Status> {
    use std::fmt::Write as _;

    match cli.command {
        Command::Generate { k, delete_vertex } => {
            let d = if delete_vertex {
                counterexample_digraph(k)?
            } else {
                cyclic_tournament(k)?
            };
            out.push_str(&write_digraph(&d));
        }
        Command::Verify { k, budget, threads } => {
            let config = SearchConfig {
                budget,
                threads: threads as usize,
            };
            let check = verify_subset_bound(k, &config)?;
            let Some(pass) = check.verdict else {
                bail!(
                    "refusing k={k}: exhaustive search needs {} subset visits, budget is {budget}",
                    check.estimate
                );
            };
            let r = &check.report;
            writeln!(out, "level k          {k}")?;
            writeln!(out, "vertices         {}", check.params.order)?;
            writeln!(out, "subset sizes     {}..={}", check.sizes.start(), check.sizes.end())?;
            writeln!(out, "bound            {}", check.params.bound)?;
            writeln!(out, "subsets visited  {}", r.nodes_visited)?;
            writeln!(out, "max min-degree   {}", r.best_value)?;
            writeln!(out, "witness          {}", r.best_set)?;
            writeln!(out, "verdict          {}", if pass { "pass" } else { "FAIL" })?;
            writeln!(out, "{}", r.result_line())?;
            eprintln!("elapsed {:.2?} on {threads} thread(s)", r.elapsed);
            if !pass {
                return Ok(Status::Failed);
            }
        }
        Command::Certify { k, set } => {
            let x = parse_set(k, &set)?;
            let (bound, cert) = certify_bound(k, &x)?;
            let t = cyclic_tournament(k)?;
            let actual = t.min_out_degree(&x)?;
            writeln!(out, "set          {x}")?;
            writeln!(out, "bound        {bound}")?;
            writeln!(out, "actual       {actual}")?;
            writeln!(out, "certificate")?;
            for line in cert.render().lines() {
                writeln!(out, "  {line}")?;
            }
        }
        Command::Search { input, size } => {
            let d = read_input(&input)?;
            let r = branch_bound_max(&d, size)?;
            writeln!(out, "vertices         {}", d.order())?;
            writeln!(out, "subset size      {size}")?;
            writeln!(out, "max min-degree   {}", r.best_value)?;
            writeln!(out, "attained by      {}", r.best_set)?;
            writeln!(out, "nodes visited    {}", r.nodes_visited)?;
            writeln!(out, "pruned           {}", r.pruned)?;
            writeln!(out, "{}", r.result_line())?;
            eprintln!("elapsed {:.2?}", r.elapsed);
        }
        Command::Split {
            input,
            trials,
            seed,
        } => {
            let d = read_input(&input)?;
            let summary = split_experiment(&d, trials, seed)?;
            out.push_str(&summary.to_csv());
            eprintln!(
                "{trials} trials: max {} mean {:.4} (better half)",
                summary.max_better_half, summary.mean_better_half
            );
        }
        Command::Table { kmax, reference } => {
            let rows = gap_table(kmax)?;
            out.push_str(&gap_table_csv(&rows, reference));
            if reference {
                eprintln!("reference columns use unit constants: reference shape only");
            }
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let mut out = String::new();
    let status = match run(cli, &mut out) {
        Ok(status) => status,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };

    let written = match &output {
        Some(path) => fs::write(path, &out).with_context(|| format!("writing {}", path.display())),
        None => io::stdout().write_all(out.as_bytes()).context("writing stdout"),
    };
    if let Err(err) = written {
        eprintln!("error: {err:#}");
        return ExitCode::from(2);
    }
    match status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Failed => ExitCode::from(1),
    }
}

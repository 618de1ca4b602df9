use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ktdom::report::{cross_check, Mismatch};
use ktdom::{io, verify_all, CheckStatus, Graph, GraphSpec, InvariantReport};

mod ensemble;

#[derive(Parser, Debug)]
#[command(
    name = "ktdom",
    version,
    about = "Exact k-tuple domination and domatic numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the edge list of a generated graph.
    Gen(GenArgs),
    /// Compute γ×k, d×k, γ×k,t and d×k,t with certificates.
    Compute(SolveArgs),
    /// Evaluate every bound on one graph and write the check ledger.
    Verify(SolveArgs),
    /// Verify a seeded family of random graphs and tabulate the results.
    #[command(long_about = ensemble::LONG_ABOUT)]
    Ensemble(ensemble::EnsembleArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Graph description, e.g. `complete:6`, `gnp:8,0.5`, `union(complete:3;complete:3)`.
    spec: GraphSpec,
    /// Seed for random families that do not carry one.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["input", "graph"])))]
struct SolveArgs {
    /// Edge-list file.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Graph description, as for `gen`.
    #[arg(short, long)]
    graph: Option<GraphSpec>,
    #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Report file; stdout when absent.
    #[arg(short, long)]
    report: Option<PathBuf>,
    /// Also write the witness sets and partitions on their own.
    #[arg(long)]
    certificate: Option<PathBuf>,
    /// Re-derive every invariant with the brute-force oracles.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gnp,
    RandomRegular,
}

impl SolveArgs {
    fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.input {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return io::read_graph(&text).with_context(|| format!("parsing {}", path.display()));
        }
        let spec = self.graph.clone().expect("clap enforces one source");
        let spec = match self.seed {
            Some(seed) => spec.with_seed(seed),
            None => spec,
        };
        Ok(spec.build()?)
    }
}

pub(crate) fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    match path {
        Some(path) => {
            fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct Certificates<'a> {
    k: usize,
    gamma_set: Option<&'a ktdom::VertexSet>,
    gamma_total_set: Option<&'a ktdom::VertexSet>,
    domatic_partition: Option<&'a ktdom::DomaticPartition>,
    domatic_total_partition: Option<&'a ktdom::DomaticPartition>,
}

impl<'a> Certificates<'a> {
    fn of(report: &'a InvariantReport) -> Self {
        Self {
            k: report.k,
            gamma_set: report.gamma.as_ref().map(|r| &r.witness),
            gamma_total_set: report.gamma_total.as_ref().map(|r| &r.witness),
            domatic_partition: report.domatic.as_ref().map(|r| &r.witness),
            domatic_total_partition: report.domatic_total.as_ref().map(|r| &r.witness),
        }
    }
}

fn report_mismatches(mismatches: &[Mismatch]) -> bool {
    for m in mismatches {
        eprintln!(
            "oracle mismatch: {} solver {} oracle {}",
            m.invariant, m.solver, m.oracle
        );
    }
    !mismatches.is_empty()
}

fn run_gen(args: GenArgs) -> Result<bool> {
    let spec = match args.seed {
        Some(seed) => args.spec.with_seed(seed),
        None => args.spec,
    };
    let g = spec.build()?;
    write_output(args.output.as_deref(), &io::write_graph(&g))?;
    Ok(true)
}

fn run_compute(args: SolveArgs) -> Result<bool> {
    let g = args.load()?;
    let k = args.k as usize;
    let report = InvariantReport::compute(&g, k)?;
    write_output(args.report.as_deref(), &to_json(&report)?)?;
    if let Some(path) = &args.certificate {
        write_output(Some(path), &to_json(&Certificates::of(&report))?)?;
    }
    let fmt = |v: Option<usize>| v.map_or("NA".to_string(), |v| v.to_string());
    eprintln!(
        "n={} k={k} gamma={} domatic={} gamma_total={} domatic_total={}",
        g.n(),
        fmt(report.gamma.as_ref().map(|r| r.value)),
        fmt(report.domatic.as_ref().map(|r| r.value)),
        fmt(report.gamma_total.as_ref().map(|r| r.value)),
        fmt(report.domatic_total.as_ref().map(|r| r.value)),
    );
    if args.oracle && report_mismatches(&cross_check(&g, &report)?) {
        return Ok(false);
    }
    Ok(true)
}

fn run_verify(args: SolveArgs) -> Result<bool> {
    let g = args.load()?;
    let k = args.k as usize;
    let report = verify_all(&g, k)?;
    write_output(args.report.as_deref(), &to_json(&report)?)?;
    if let Some(path) = &args.certificate {
        let invariants = report.invariant_report();
        write_output(Some(path), &to_json(&Certificates::of(&invariants))?)?;
    }
    for check in &report.checks {
        let values = match (check.lhs, check.rhs) {
            (Some(l), Some(r)) => format!(" {l} vs {r}"),
            _ => String::new(),
        };
        eprintln!("{:<13} {:<15}{values}", check.id, check.status.as_str());
        if check.status == CheckStatus::Violated {
            for note in &check.notes {
                eprintln!("              {note}");
            }
        }
    }
    let mut ok = !report.has_violation();
    if args.oracle {
        ok &= !report_mismatches(&cross_check(&g, &report.invariant_report())?);
    }
    Ok(ok)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Compute(args) => run_compute(args),
        Command::Verify(args) => run_verify(args),
        Command::Ensemble(args) => ensemble::run(args),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

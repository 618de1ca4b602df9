use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::Args;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use ktdom::report::cross_check;
use ktdom::theorems::{summarize, CHECK_IDS};
use ktdom::{generators, verify_all, CheckStatus, Graph, TheoremReport};

use crate::{write_output, Model};

pub const LONG_ABOUT: &str = "\
Verify a seeded family of random graphs and tabulate the results.

Instance i uses a seed derived from (--seed, i), so rows do not depend on
scheduling. Rows are sorted by instance id.

CSV columns, in order:
  id, model, n, param (p=... or r=...), seed, edges, min_degree, max_degree,
  gamma, domatic, gamma_total, domatic_total, complement_domatic,
  C1, C2, C3, C4, C5, C5b, C6, C7, C7-regular, C7-structure, C7-corollary,
  C8, C9-lower, C9-upper, C10, C11,
  oracle (ok | mismatch | NA), error,
  wall_ms (only with --timing).

Invariants whose degree condition fails are written as NA. Check columns hold
holds | sharp | violated | not-applicable. Exit status is 1 when any check is
violated or an oracle disagrees, 2 on configuration or I/O errors.";

#[derive(Args, Debug)]
pub struct EnsembleArgs {
    #[arg(long, value_enum)]
    model: Model,
    #[arg(long)]
    n: usize,
    /// Edge probability for `gnp`.
    #[arg(long)]
    p: Option<f64>,
    /// Degree for `random-regular`.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    count: usize,
    /// Master seed.
    #[arg(long)]
    seed: u64,
    #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
    k: u64,
    /// CSV output; stdout when absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// JSON summary output.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Cross-check every instance against the brute-force oracles.
    #[arg(long)]
    oracle: bool,
    /// Add a wall-clock column (makes the CSV non-reproducible).
    #[arg(long)]
    timing: bool,
    /// Worker threads; rayon's default when absent.
    #[arg(long)]
    threads: Option<usize>,
}

/// Seed of instance `id`: first output of the ChaCha stream `id` under the
/// master seed.
pub fn instance_seed(master: u64, id: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(id);
    rng.next_u64()
}

struct Outcome {
    id: usize,
    seed: u64,
    graph: Option<Graph>,
    report: Option<TheoremReport>,
    mismatch: Option<bool>,
    error: Option<String>,
    wall_ms: f64,
}

#[derive(Serialize)]
struct Summary {
    model: String,
    n: usize,
    param: String,
    k: usize,
    count: usize,
    seed: u64,
    errors: usize,
    instances_with_violations: usize,
    oracle_mismatches: usize,
    status_counts: BTreeMap<&'static str, usize>,
    violations_by_check: BTreeMap<&'static str, usize>,
}

fn na(v: Option<usize>) -> String {
    v.map_or_else(|| "NA".to_string(), |v| v.to_string())
}

pub fn run(args: EnsembleArgs) -> Result<bool> {
    let k = args.k as usize;
    let (model_name, param) = match args.model {
        Model::Gnp => {
            let Some(p) = args.p else {
                bail!("--model gnp needs --p")
            };
            if !(0.0..=1.0).contains(&p) {
                bail!("--p must lie in [0, 1]");
            }
            ("gnp", format!("p={p}"))
        }
        Model::RandomRegular => {
            let Some(r) = args.r else {
                bail!("--model random-regular needs --r")
            };
            ("random-regular", format!("r={r}"))
        }
    };

    let solve = |id: usize| -> Result<Outcome> {
        let seed = instance_seed(args.seed, id as u64);
        let start = Instant::now();
        let graph = match args.model {
            Model::Gnp => generators::gnp(args.n, args.p.unwrap(), seed),
            Model::RandomRegular => generators::random_regular(args.n, args.r.unwrap(), seed),
        };
        let mut outcome = Outcome {
            id,
            seed,
            graph: None,
            report: None,
            mismatch: None,
            error: None,
            wall_ms: 0.0,
        };
        match graph {
            Ok(g) => {
                let report = verify_all(&g, k)?;
                if args.oracle {
                    outcome.mismatch =
                        Some(!cross_check(&g, &report.invariant_report())?.is_empty());
                }
                outcome.report = Some(report);
                outcome.graph = Some(g);
            }
            Err(e) => outcome.error = Some(e.to_string()),
        }
        outcome.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        Ok(outcome)
    };

    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = args.threads {
            builder = builder.num_threads(t);
        }
        builder.build().context("building worker pool")?
    };
    let mut outcomes: Vec<Outcome> = pool.install(|| {
        (0..args.count)
            .into_par_iter()
            .map(solve)
            .collect::<Result<Vec<_>>>()
    })?;
    outcomes.sort_by_key(|o| o.id);

    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = [
        "id",
        "model",
        "n",
        "param",
        "seed",
        "edges",
        "min_degree",
        "max_degree",
        "gamma",
        "domatic",
        "gamma_total",
        "domatic_total",
        "complement_domatic",
    ]
    .iter()
    .map(ToString::to_string)
    .collect();
    header.extend(CHECK_IDS.iter().map(ToString::to_string));
    header.push("oracle".into());
    header.push("error".into());
    if args.timing {
        header.push("wall_ms".into());
    }
    writer.write_record(&header)?;

    for o in &outcomes {
        let mut row = vec![
            o.id.to_string(),
            model_name.to_string(),
            args.n.to_string(),
            param.clone(),
            o.seed.to_string(),
        ];
        match (&o.graph, &o.report) {
            (Some(g), Some(r)) => {
                let inv = &r.invariants;
                row.extend([
                    g.edge_count().to_string(),
                    g.min_degree().to_string(),
                    g.max_degree().to_string(),
                    na(inv.gamma.as_ref().map(|x| x.value)),
                    na(inv.domatic.as_ref().map(|x| x.value)),
                    na(inv.gamma_total.as_ref().map(|x| x.value)),
                    na(inv.domatic_total.as_ref().map(|x| x.value)),
                    na(inv.complement_domatic.as_ref().map(|x| x.value)),
                ]);
                for id in CHECK_IDS {
                    row.push(r.status(id).map_or("NA", CheckStatus::as_str).to_string());
                }
            }
            _ => row.extend(std::iter::repeat_n("NA".to_string(), 8 + CHECK_IDS.len())),
        }
        row.push(match o.mismatch {
            None => "NA".into(),
            Some(true) => "mismatch".into(),
            Some(false) => "ok".into(),
        });
        row.push(o.error.clone().unwrap_or_default());
        if args.timing {
            row.push(format!("{:.3}", o.wall_ms));
        }
        writer.write_record(&row)?;
    }
    let csv_bytes = writer.into_inner().context("flushing CSV")?;
    write_output(args.csv.as_deref(), &String::from_utf8(csv_bytes)?)?;

    let reports: Vec<&TheoremReport> = outcomes.iter().filter_map(|o| o.report.as_ref()).collect();
    let mut violations_by_check = BTreeMap::new();
    for r in &reports {
        for c in r.violations() {
            *violations_by_check.entry(c.id).or_insert(0) += 1;
        }
    }
    let summary = Summary {
        model: model_name.into(),
        n: args.n,
        param,
        k,
        count: args.count,
        seed: args.seed,
        errors: outcomes.iter().filter(|o| o.error.is_some()).count(),
        instances_with_violations: reports.iter().filter(|r| r.has_violation()).count(),
        oracle_mismatches: outcomes.iter().filter(|o| o.mismatch == Some(true)).count(),
        status_counts: summarize(reports.iter().copied())
            .into_iter()
            .map(|(s, c)| (s.as_str(), c))
            .collect(),
        violations_by_check,
    };
    let summary_json = serde_json::to_string_pretty(&summary)? + "\n";
    eprint!("{summary_json}");
    if let Some(path) = &args.summary {
        write_output(Some(path), &summary_json)?;
    }
    Ok(summary.instances_with_violations == 0 && summary.oracle_mismatches == 0)
}

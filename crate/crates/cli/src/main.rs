//! `dimdata`: reproducible reports on adjoint embeddings into `SO(2N)`, their
//! odd twists, and the representation theory behind them.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for usage or input errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use dimdata::cache::{DiskCache, CACHE_DIR_ENV};
use dimdata::conjugacy::{local_conjugacy_check, obstruction_report_with_cache};
use dimdata::embed::verify_dimension_data_equal;
use dimdata::repchar::enumerate_irreps_of_dim;
use dimdata::rootsys::{classify_examples, RootSystem, SimpleType, Verdict};

use output::{render, Format, Outcome};

#[derive(Parser, Debug)]
#[command(name = "dimdata", version, about = "Dimension data and conjugacy of adjoint embeddings H -> SO(2N)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
struct GlobalArgs {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Never read or write the on-disk cache.
    #[arg(long, global = true)]
    #[serde(skip)]
    no_cache: bool,

    #[arg(long, env = CACHE_DIR_ENV, global = true)]
    #[serde(skip)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Simple types admitting the construction, cross-checked against the
    /// obstruction report.
    Classify {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Fixed-space dimensions of `i` and `i′` on every `SO(2N)` irreducible
    /// up to a dimension bound.
    DimensionData {
        #[arg(long = "type")]
        #[serde(rename = "type")]
        h_type: SimpleType,
        #[arg(long, default_value_t = 1000)]
        bound: u128,
    },
    /// Eigenvalue multisets of `i(t)` and `i′(t)` on seeded torus samples.
    LocalConjugacy {
        #[arg(long = "type")]
        #[serde(rename = "type")]
        h_type: SimpleType,
        #[arg(long, default_value_t = 200)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Irreducible representations of a given dimension with their invariant
    /// form types.
    IrrepsOfDim {
        #[arg(long)]
        dim: u128,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        /// Leave out products of two simple algebras.
        #[arg(long)]
        simple_only: bool,
    },
    /// The verified ingredients of the global obstruction for one type.
    Obstruction {
        #[arg(long = "type")]
        #[serde(rename = "type")]
        h_type: SimpleType,
    },
    /// Roots, Cartan matrix and inner products of one type.
    Dump {
        #[arg(long = "type")]
        #[serde(rename = "type")]
        h_type: SimpleType,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::DimensionData { .. } => "dimension-data",
            Command::LocalConjugacy { .. } => "local-conjugacy",
            Command::IrrepsOfDim { .. } => "irreps-of-dim",
            Command::Obstruction { .. } => "obstruction",
            Command::Dump { .. } => "dump",
        }
    }

    fn seed(&self) -> u64 {
        match self {
            Command::LocalConjugacy { seed, .. } => *seed,
            _ => 0,
        }
    }
}

#[derive(Serialize)]
struct RunConfig<'a> {
    command: &'a Command,
    format: Format,
}

fn cache_for(g: &GlobalArgs) -> DiskCache {
    match (&g.cache_dir, g.no_cache) {
        (_, true) => DiskCache::disabled(),
        (Some(dir), false) => DiskCache::at(dir),
        (None, false) => DiskCache::from_env(),
    }
}

fn classify(max_rank: usize, cache: &DiskCache) -> Result<Outcome> {
    let rows = classify_examples(max_rank);
    let reports = rows
        .par_iter()
        .map(|c| obstruction_report_with_cache(c.simple_type, cache))
        .collect::<dimdata::Result<Vec<_>>>()?;
    let mismatches: Vec<String> = rows
        .iter()
        .zip(&reports)
        .filter(|(c, r)| (c.verdict == Verdict::Example) != r.is_obstructed())
        .map(|(c, _)| c.simple_type.to_string())
        .collect();
    let examples: Vec<String> = rows
        .iter()
        .filter(|c| c.verdict == Verdict::Example)
        .map(|c| c.simple_type.to_string())
        .collect();
    let table = rows
        .iter()
        .zip(&reports)
        .map(|(c, r)| {
            vec![
                c.simple_type.to_string(),
                c.verdict.to_string(),
                r.verdict.to_string(),
                c.isomorphic_to.map(|t| t.to_string()).unwrap_or_default(),
                c.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let entries: Vec<_> = rows
        .iter()
        .zip(&reports)
        .map(|(c, r)| {
            json!({
                "type": c.simple_type,
                "verdict": c.verdict,
                "obstruction": r.verdict,
                "isomorphic_to": c.isomorphic_to,
                "note": c.note,
            })
        })
        .collect();
    Ok(Outcome {
        passed: mismatches.is_empty(),
        summary: vec![
            format!("EXAMPLE: {}", examples.join(", ")),
            format!("classification and obstruction report disagree on: {}", if mismatches.is_empty() { "none".to_string() } else { mismatches.join(", ") }),
        ],
        result: json!({ "max_rank": max_rank, "examples": examples, "mismatches": mismatches, "rows": entries }),
        headers: vec!["type", "verdict", "obstruction", "isomorphic_to", "note"],
        rows: table,
    })
}

fn dimension_data(h: SimpleType, bound: u128) -> Result<Outcome> {
    let report = verify_dimension_data_equal(Arc::new(RootSystem::new(h)), bound)?;
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.highest_weight.to_string(),
                format!("{:?}", r.epsilon).replace(' ', ""),
                r.dimension.to_string(),
                r.fixed_untwisted.to_string(),
                r.fixed_twisted.to_string(),
                r.equal.to_string(),
            ]
        })
        .collect();
    Ok(Outcome {
        passed: report.all_equal,
        summary: vec![format!(
            "{} in {}: {} irreducibles of dimension <= {}, {} discrepancies",
            report.h_type,
            report.target,
            report.rows.len(),
            bound,
            report.discrepancies
        )],
        result: serde_json::to_value(&report)?,
        headers: vec!["highest_weight", "epsilon", "dimension", "fixed_i", "fixed_i_twisted", "equal"],
        rows,
    })
}

fn local_conjugacy(h: SimpleType, samples: u64, seed: u64) -> Result<Outcome> {
    let report = local_conjugacy_check(Arc::new(RootSystem::new(h)), samples, seed)?;
    let min_one = report
        .min_eigenvalue_one_multiplicity
        .map_or_else(|| "-".to_string(), |m| m.to_string());
    Ok(Outcome {
        passed: report.passed(),
        summary: vec![format!(
            "{} samples, {} failures, minimum multiplicity of eigenvalue 1: {min_one}",
            report.samples, report.failures
        )],
        rows: vec![vec![
            report.h_type.clone(),
            report.samples.to_string(),
            report.seed.to_string(),
            report.failures.to_string(),
            min_one,
            report.all_inversion_closed.to_string(),
        ]],
        headers: vec!["type", "samples", "seed", "failures", "min_mult_1", "inversion_closed"],
        result: serde_json::to_value(&report)?,
    })
}

fn irreps_of_dim(d: u128, max_rank: usize, simple_only: bool) -> Result<Outcome> {
    let entries = enumerate_irreps_of_dim(d, max_rank, !simple_only)?;
    let rows = entries
        .iter()
        .map(|e| {
            vec![
                e.algebra_label(),
                e.weight_label(),
                e.dimension.to_string(),
                e.form.to_string(),
                e.note.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let result: Vec<_> = entries
        .iter()
        .map(|e| {
            json!({
                "algebra": e.algebra_label(),
                "highest_weight": e.weight_label(),
                "dimension": e.dimension,
                "form": e.form,
                "note": e.note,
            })
        })
        .collect();
    Ok(Outcome {
        passed: true,
        summary: vec![format!("{} irreducible(s) of dimension {d}", entries.len())],
        result: json!({ "dim": d, "max_rank": max_rank, "entries": result }),
        headers: vec!["algebra", "highest_weight", "dimension", "form", "note"],
        rows,
    })
}

fn obstruction(h: SimpleType, cache: &DiskCache) -> Result<Outcome> {
    let report = obstruction_report_with_cache(h, cache)?;
    let rows = report
        .ingredients
        .iter()
        .map(|(k, i)| vec![k.clone(), i.status.to_string(), i.detail.clone()])
        .collect();
    Ok(Outcome {
        // a failing ingredient is an answer, not a failed check
        passed: true,
        summary: vec![format!("{}: {}", report.h_type, report.verdict), report.note.clone()],
        result: serde_json::to_value(&report)?,
        headers: vec!["ingredient", "status", "detail"],
        rows,
    })
}

fn dump(h: SimpleType) -> Result<Outcome> {
    let rs = RootSystem::new(h);
    let d = rs.dump();
    let rows = d
        .positive_roots
        .iter()
        .zip(&d.positive_roots_simple_coords)
        .enumerate()
        .map(|(k, (w, s))| vec![k.to_string(), format!("{w:?}").replace(' ', ""), format!("{s:?}").replace(' ', "")])
        .collect();
    Ok(Outcome {
        passed: true,
        summary: vec![format!(
            "{}: rank {}, {} roots, dimension {}",
            d.type_label,
            d.rank,
            d.roots.len(),
            rs.algebra_dimension()
        )],
        result: serde_json::to_value(&d)?,
        headers: vec!["index", "fundamental_coords", "simple_root_coords"],
        rows,
    })
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cache = cache_for(&cli.global);
    match &cli.command {
        Command::Classify { max_rank } => classify(*max_rank, &cache),
        Command::DimensionData { h_type, bound } => dimension_data(*h_type, *bound),
        Command::LocalConjugacy { h_type, samples, seed } => local_conjugacy(*h_type, *samples, *seed),
        Command::IrrepsOfDim {
            dim,
            max_rank,
            simple_only,
        } => irreps_of_dim(*dim, *max_rank, *simple_only),
        Command::Obstruction { h_type } => obstruction(*h_type, &cache),
        Command::Dump { h_type } => dump(*h_type),
    }
}

/// Input errors exit with 2 like usage errors; everything else is a failed
/// computation.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    use dimdata::Error as E;
    match err.downcast_ref::<E>() {
        Some(
            E::InvalidType { .. }
            | E::TypeParse(_)
            | E::OddRank { .. }
            | E::RankMismatch { .. }
            | E::NotDominantIntegral(_)
            | E::Overflow(_),
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        command: &cli.command,
        format: cli.global.format,
    };
    let outcome = run(&cli).and_then(|out| {
        let text = render(cli.command.name(), cli.command.seed(), &config, cli.global.format, &out)
            .context("rendering report")?;
        Ok((out.passed, text))
    });
    match outcome {
        Ok((passed, text)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

//! Command-line front end: compute, tabulate, verify and batch-cache
//! Poincare series.

pub mod cache;

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use covseries::springer::Check;
use covseries::{dim_cov, dim_table, poincare_series, verify_series, Format};

use cache::{Loaded, VerifiedTo};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD_CACHE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "covseries", version, about = "Poincare series of covariants of binary forms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn degree() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesFormat {
    Text,
    Latex,
    Json,
}

impl From<SeriesFormat> for Format {
    fn from(f: SeriesFormat) -> Self {
        match f {
            SeriesFormat::Text => Format::Text,
            SeriesFormat::Latex => Format::Latex,
            SeriesFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the closed-form series P_d(z,t).
    Series {
        #[arg(value_parser = degree())]
        d: u32,
        #[arg(long, value_enum, default_value_t = SeriesFormat::Text)]
        format: SeriesFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print dim (C_d)_{i,j}.
    Dim {
        #[arg(value_parser = degree())]
        d: u32,
        i: u32,
        j: u32,
    },
    /// Print the dimension grid for i <= imax, j <= jmax.
    Table {
        #[arg(value_parser = degree())]
        d: u32,
        #[arg(long)]
        imax: u32,
        #[arg(long)]
        jmax: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Compare the series expansion with the dimension table.
    Verify {
        #[arg(value_parser = degree())]
        d: u32,
        #[arg(long, default_value_t = 10)]
        imax: u32,
        /// Defaults to d * imax, the full order range.
        #[arg(long)]
        jmax: Option<u32>,
    },
    /// Compute and cache poincare_d<k>.json for k = 1..=dmax.
    Batch {
        #[arg(long, value_parser = degree())]
        dmax: u32,
        #[arg(long)]
        cache: PathBuf,
        /// Defaults to the number of available processors.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        workers: Option<u32>,
    },
}

/// Runs one command, writing results to `out`, and returns the exit status.
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Series { d, format, out: file } => {
            let series = poincare_series(*d)?;
            let mut text = series.render((*format).into());
            text.push('\n');
            match file {
                Some(path) => std::fs::write(path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Dim { d, i, j } => {
            writeln!(out, "{}", dim_cov(*d, *i, *j))?;
            Ok(EXIT_OK)
        }
        Command::Table { d, imax, jmax, format } => {
            let table = dim_table(*d, *imax, *jmax);
            match format {
                TableFormat::Csv => out.write_all(table.to_csv().as_bytes())?,
                TableFormat::Json => writeln!(out, "{}", table.to_json())?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { d, imax, jmax } => {
            let jmax = jmax.unwrap_or(d * imax);
            verify(*d, *imax, jmax, out)
        }
        Command::Batch { dmax, cache, workers } => {
            let workers = workers.map(|w| w as usize).unwrap_or_else(|| {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            });
            batch(*dmax, cache, workers, out)
        }
    }
}

fn verify(d: u32, imax: u32, jmax: u32, out: &mut dyn Write) -> Result<i32> {
    let series = poincare_series(d)?;
    let report = verify_series(&series, d, imax, jmax);
    if report.passed() {
        writeln!(out, "d={d} imax={imax} jmax={jmax}: ok")?;
        return Ok(EXIT_OK);
    }
    for (check, m) in &report.mismatches {
        let label = match check {
            Check::Coefficient => "",
            Check::Invariant => " [invariant formula]",
            Check::RowSum => " [row sum]",
        };
        writeln!(out, "({},{}): expected {}, got {}{label}", m.i, m.j, m.expected, m.got)?;
    }
    writeln!(out, "d={d} imax={imax} jmax={jmax}: {} mismatches", report.mismatches.len())?;
    Ok(EXIT_MISMATCH)
}

/// What happened to one degree during a batch run.
#[derive(Debug)]
enum Outcome {
    Cached,
    Computed,
    Recomputed { reason: String, moved_to: PathBuf },
    Failed(String),
}

fn batch_one(d: u32, dir: &std::path::Path) -> (Outcome, Duration) {
    let start = Instant::now();
    let stale = match cache::load(dir, d) {
        Loaded::Valid(_) => return (Outcome::Cached, start.elapsed()),
        Loaded::Missing => None,
        Loaded::Invalid(reason) => match cache::quarantine(dir, d) {
            Ok(moved_to) => Some((reason, moved_to)),
            Err(e) => return (Outcome::Failed(format!("cannot quarantine: {e}")), start.elapsed()),
        },
    };
    let series = match poincare_series(d) {
        Ok(series) => series,
        Err(e) => return (Outcome::Failed(e.to_string()), start.elapsed()),
    };
    let to = VerifiedTo {
        imax: cache::REVERIFY_IMAX,
        jmax: cache::reverify_jmax(d),
    };
    let report = verify_series(&series, d, to.imax, to.jmax);
    if !report.passed() {
        let msg = format!("fresh series fails verification ({} mismatches)", report.mismatches.len());
        return (Outcome::Failed(msg), start.elapsed());
    }
    if let Err(e) = cache::store(dir, d, &series, to) {
        return (Outcome::Failed(format!("cannot write cache: {e}")), start.elapsed());
    }
    let outcome = match stale {
        None => Outcome::Computed,
        Some((reason, moved_to)) => Outcome::Recomputed { reason, moved_to },
    };
    (outcome, start.elapsed())
}

fn batch(dmax: u32, dir: &std::path::Path, workers: usize, out: &mut dyn Write) -> Result<i32> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    // larger degrees first so the slowest jobs start early
    let mut results: Vec<(u32, Outcome, Duration)> = pool.install(|| {
        (1..=dmax)
            .rev()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|d| {
                let (outcome, elapsed) = batch_one(d, dir);
                (d, outcome, elapsed)
            })
            .collect()
    });
    results.sort_by_key(|(d, _, _)| *d);
    let mut status = EXIT_OK;
    for (d, outcome, elapsed) in &results {
        let ms = elapsed.as_secs_f64() * 1e3;
        match outcome {
            Outcome::Cached => writeln!(out, "d={d} cached {ms:.1}ms")?,
            Outcome::Computed => writeln!(out, "d={d} computed {ms:.1}ms")?,
            Outcome::Recomputed { reason, moved_to } => {
                writeln!(out, "d={d} recomputed {ms:.1}ms (bad cache: {reason}; moved to {})", moved_to.display())?;
                status = status.max(EXIT_BAD_CACHE);
            }
            Outcome::Failed(msg) => {
                writeln!(out, "d={d} failed {ms:.1}ms: {msg}")?;
                status = status.max(EXIT_MISMATCH);
            }
        }
    }
    Ok(status)
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Parser, Subcommand, ValueEnum};

use catsort::export::{
    compare_bfiles, parse_bfile, run_scan, sequence_terms, write_bfile, write_csv, write_jsonl, OeisSequence,
    ScanConfig, ScanFormat,
};
use catsort::limit::{excursion_cdf, ExcursionQuery, QuadratureConfig};
use catsort::sortprob::{delta_with, expected_position, find_crossing, r_function};
use catsort::verify::{self, CheckResult};
use catsort::{BinomialCache, Cell, CrossingOutcome, DeltaMode, Error, Exec, ExactRatio};

/// Exact sorting probabilities of the Catalan poset C2 x Cn.
///
/// The factorial cache holds n <= 2000 by default; set CATSORT_NMAX to change it.
#[derive(Parser)]
#[command(name = "catsort", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Screened,
}

impl From<ModeArg> for DeltaMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => DeltaMode::Exact,
            ModeArg::Screened => DeltaMode::Screened,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Jsonl,
    OeisBfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceArg {
    #[value(name = "A335212", alias = "a335212")]
    A335212,
    #[value(name = "A335213", alias = "a335213")]
    A335213,
}

impl From<SequenceArg> for OeisSequence {
    fn from(s: SequenceArg) -> Self {
        match s {
            SequenceArg::A335212 => OeisSequence::A335212,
            SequenceArg::A335213 => OeisSequence::A335213,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Oracle,
    Limit,
    Crossing,
}

#[derive(Subcommand)]
enum Command {
    /// R_n(h, z) = P[L(2, h-z) < L(1, h)]
    Rn {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        z: u32,
    },
    /// Sorting probability delta(P_n) and the pair attaining it
    Delta {
        #[arg(long)]
        n: u32,
        #[arg(long, conflicts_with = "screened")]
        exact: bool,
        #[arg(long)]
        screened: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// delta(P_n) over a range of n
    Scan {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value = "screened")]
        mode: ModeArg,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Sequence written by the b-file format
        #[arg(long, value_enum, default_value = "A335212")]
        sequence: SequenceArg,
        /// Output file, `-` for standard output
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// OEIS b-file for A335212 or A335213, starting at n = 3
    ExportOeis {
        #[arg(long, value_enum)]
        which: SequenceArg,
        #[arg(long)]
        max_n: u32,
        #[arg(long, short, default_value = "-")]
        output: String,
        /// Existing b-file to diff against over the shared range
        #[arg(long)]
        compare: Option<String>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest n for the lemma and oracle suites
        #[arg(long)]
        max_n: Option<u32>,
        /// n for the crossing suite
        #[arg(long, default_value_t = 1000)]
        n: u32,
    },
    /// Brownian excursion CDF F(t, r) = P[e(t) <= r]
    Limit {
        #[arg(long)]
        t: f64,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Expected position E[L(row, col)] in a uniform linear extension
    Expected {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        row: u8,
        #[arg(long)]
        col: u32,
    },
    /// The crossing construction: z* and h1 with R_n bracketing 1/2
    Crossing {
        #[arg(long)]
        n: u32,
    },
}

enum Failure {
    Verification,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn approx(r: &ExactRatio) -> String {
    format!("{r} ≈ {}", r.to_f64())
}

fn open_output(path: &str) -> io::Result<Box<dyn Write>> {
    if path == "-" {
        Ok(Box::new(BufWriter::new(io::stdout().lock())))
    } else {
        Ok(Box::new(BufWriter::new(File::create(path)?)))
    }
}

fn report(results: &[CheckResult]) -> Result<(), Failure> {
    for r in results {
        println!("{r}");
    }
    if verify::all_passed(results) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = BinomialCache::from_env()?;
    match cli.command {
        Command::Rn { n, h, z } => {
            println!("{}", approx(&r_function(&cache, n, h, z)?));
        }
        Command::Delta { n, exact, screened: _, sequential } => {
            let mode = if exact { DeltaMode::Exact } else { DeltaMode::Screened };
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let d = delta_with(&cache, n, mode, exec)?;
            println!("{} at pair {},{}", d.delta, d.argmin.x, d.argmin.y);
            println!("delta_float {:.16e}", d.delta_float);
            println!("scaled_n54 {:.16e}", d.scaled_n54);
            println!("log_n_delta {:.16e}", d.log_n_delta);
            println!("delta_times_catalan {}", d.delta_count);
        }
        Command::Scan { from, to, mode, workers, format, sequence, output } => {
            let format = match format {
                FormatArg::Csv => ScanFormat::Csv,
                FormatArg::Jsonl => ScanFormat::Jsonl,
                FormatArg::OeisBfile => ScanFormat::OeisBfile,
            };
            let cfg = ScanConfig { n_from: from, n_to: to, mode: mode.into(), workers, output_path: output, format };
            let total = (to.saturating_sub(from) + 1) as usize;
            let step = (total / 20).max(1);
            let done = AtomicUsize::new(0);
            let records = run_scan(&cache, &cfg, |_| {
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                if k.is_multiple_of(step) || k == total {
                    eprintln!("scan: {k}/{total}");
                }
            })?;
            let mut out = open_output(&cfg.output_path)?;
            match cfg.format {
                ScanFormat::Csv => write_csv(&mut out, &records)?,
                ScanFormat::Jsonl => write_jsonl(&mut out, &records)?,
                ScanFormat::OeisBfile => write_bfile(&mut out, sequence.into(), &records)?,
            }
            out.flush()?;
        }
        Command::ExportOeis { which, max_n, output, compare, workers } => {
            let terms = sequence_terms(&cache, which.into(), 3, max_n, workers)?;
            let mut out = open_output(&output)?;
            for (n, v) in &terms {
                writeln!(out, "{n} {v}")?;
            }
            out.flush()?;
            drop(out);
            if let Some(path) = compare {
                let theirs = parse_bfile(&std::fs::read_to_string(&path)?)?;
                let cmp = compare_bfiles(&terms, &theirs);
                eprintln!("compare: {} shared terms, {} mismatches", cmp.shared, cmp.mismatches.len());
                for (n, ours, other) in cmp.mismatches.iter().take(10) {
                    eprintln!("  n={n}: ours {ours}, {path} {other}");
                }
                if !cmp.is_clean() {
                    return Err(Failure::Verification);
                }
            }
        }
        Command::Verify { suite, max_n, n } => {
            let results = match suite {
                SuiteArg::Lemmas => verify::lemma_suite(&cache, max_n.unwrap_or(60), Exec::Parallel)?,
                SuiteArg::Oracle => verify::oracle_suite(&cache, max_n.unwrap_or(10))?,
                SuiteArg::Limit => verify::limit_suite(&cache)?,
                SuiteArg::Crossing => verify::crossing_suite(&cache, n)?,
            };
            report(&results)?;
        }
        Command::Limit { t, r, tol } => {
            let cfg = QuadratureConfig { abs_tol: tol, ..QuadratureConfig::default() };
            println!("{:.16e}", excursion_cdf(ExcursionQuery::new(t, r)?, cfg)?);
        }
        Command::Expected { n, row, col } => {
            println!("{}", approx(&expected_position(&cache, n, Cell::new(row, col))?));
        }
        Command::Crossing { n } => match find_crossing(&cache, n)? {
            CrossingOutcome::Found(c) => {
                println!("z_star {}", c.z_star);
                println!("h1 {}", c.h1);
                println!("R(h1, z_star) {}", approx(&c.r_at_h1));
                println!("R(h1+1, z_star) {}", approx(&c.r_at_h1_plus));
                println!("margin {}", c.margin().to_f64());
            }
            CrossingOutcome::NoCrossing { reason, .. } => {
                println!("no crossing: {reason}");
                return Err(Failure::Verification);
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("catsort: {e}");
            ExitCode::from(2)
        }
    }
}

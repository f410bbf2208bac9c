//! `adicseq`: build the interleaved period-4p sequences, inspect their
//! autocorrelation and complexity, and run the identity checks.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on bad
//! arguments or malformed input.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use adicseq::complexity::linear_complexity;
use adicseq::numtheory::{admissible_primes, check_admissible};
use adicseq::{
    build_params, construct_u, spectrum, two_adic_complexity, verify_all, BVector, BinarySequence,
    VerificationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

#[derive(Debug, Parser)]
#[command(name = "adicseq", version, about = "Interleaved period-4p sequences: construction, autocorrelation, 2-adic complexity")]
struct RunConfig {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Where a sequence comes from: a prime and b vector, or a sequence file.
#[derive(Debug, Args)]
struct Source {
    /// Admissible prime
    #[arg(long = "p")]
    p: Option<u64>,
    /// Four-bit column offset vector, e.g. 0101
    #[arg(long = "b")]
    b: Option<String>,
    /// Sequence file (`N=<period>` line, then the bits)
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long = "out")]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List admissible primes p <= max-p
    Primes {
        #[arg(long = "max-p")]
        max_p: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Build the period-4p sequence for (p, b) and write it in sequence-file form
    Construct {
        #[arg(long = "p")]
        p: u64,
        #[arg(long = "b")]
        b: String,
        #[command(flatten)]
        output: Output,
    },
    /// Periodic autocorrelation spectrum and optimality class
    Autocorr {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Exact 2-adic complexity report
    Adic {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Linear complexity (Berlekamp-Massey)
    Linear {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Run every identity check for one prime
    Verify {
        #[arg(long = "p")]
        p: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Run every identity check for a list or range of primes
    Scan {
        /// Comma-separated primes
        #[arg(long = "p-list", value_delimiter = ',', conflicts_with = "max_p")]
        p_list: Option<Vec<u64>>,
        /// Scan every admissible prime up to this bound
        #[arg(long = "max-p")]
        max_p: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug)]
enum Failure {
    /// Bad flags or input: exit 2.
    Usage(String),
    /// Some check did not pass: exit 1.
    Checks(String),
}

type CmdResult = Result<(), Failure>;

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_b(b: &str) -> Result<BVector, Failure> {
    b.parse::<BVector>().map_err(usage)
}

fn constructed(p: u64, b: &str) -> Result<BinarySequence, Failure> {
    let b = parse_b(b)?;
    let params = build_params(p).map_err(usage)?;
    Ok(construct_u(&params, b))
}

fn read_sequence(path: &Path) -> Result<BinarySequence, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    text.parse::<BinarySequence>()
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

impl Source {
    fn load(&self) -> Result<BinarySequence, Failure> {
        match (&self.input, self.p, &self.b) {
            (Some(path), None, None) => read_sequence(path),
            (None, Some(p), Some(b)) => constructed(p, b),
            (Some(_), _, _) => Err(usage("--in cannot be combined with --p/--b")),
            (None, Some(_), None) => Err(usage("--p needs --b")),
            (None, None, Some(_)) => Err(usage("--b needs --p")),
            (None, None, None) => Err(usage("give either --p and --b, or --in")),
        }
    }
}

impl Output {
    fn emit(&self, text: &str) -> CmdResult {
        match &self.out {
            Some(path) => fs::write(path, text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn check_reports(reports: &[VerificationReport]) -> CmdResult {
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.all_pass())
        .map(|r| format!("p={}: {}", r.p, r.failures().join(", ")))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks(format!("failed checks: {}", failed.join("; "))))
    }
}

fn run(cfg: RunConfig) -> CmdResult {
    match cfg.command {
        Command::Primes { max_p, output } => {
            if max_p < 5 {
                return Err(usage("--max-p must be at least 5"));
            }
            let rows: Vec<_> = admissible_primes(max_p)
                .into_iter()
                .map(|p| render::PrimeRow {
                    p,
                    x: (p - 4).isqrt(),
                    f: (p - 1) / 4,
                })
                .collect();
            output.emit(&render::primes(&rows, output.format))
        }
        Command::Construct { p, b, output } => {
            let u = constructed(p, &b)?;
            let summary = render::construct_summary(p, &b, &u, output.out.as_deref(), output.format);
            match &output.out {
                Some(path) => {
                    fs::write(path, u.to_string()).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    print!("{summary}");
                }
                None => {
                    print!("{u}");
                    eprint!("{summary}");
                }
            }
            Ok(())
        }
        Command::Autocorr { source, output } => {
            let s = source.load()?;
            output.emit(&render::spectrum(&spectrum(&s), output.format))
        }
        Command::Adic { source, output } => {
            let s = source.load()?;
            output.emit(&render::adic(&two_adic_complexity(&s), output.format))
        }
        Command::Linear { source, output } => {
            let s = source.load()?;
            output.emit(&render::linear(s.period(), linear_complexity(&s), output.format))
        }
        Command::Verify { p, output } => {
            let report = verify_all(p).map_err(usage)?;
            output.emit(&render::reports(std::slice::from_ref(&report), output.format))?;
            check_reports(std::slice::from_ref(&report))
        }
        Command::Scan {
            p_list,
            max_p,
            output,
        } => {
            let mut primes = match (p_list, max_p) {
                (Some(list), None) => list,
                (None, Some(max_p)) => admissible_primes(max_p),
                _ => return Err(usage("give --p-list or --max-p")),
            };
            primes.sort_unstable();
            primes.dedup();
            for &p in &primes {
                check_admissible(p).map_err(usage)?;
            }
            // collect() keeps input order, so output stays ascending in p
            let reports = primes
                .par_iter()
                .map(|&p| verify_all(p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(usage)?;
            output.emit(&render::reports(&reports, output.format))?;
            check_reports(&reports)
        }
    }
}

fn main() -> ExitCode {
    let cfg = match RunConfig::try_parse() {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks(msg)) => {
            eprintln!("adicseq: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("adicseq: {msg}");
            ExitCode::from(2)
        }
    }
}

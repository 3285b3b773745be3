mod commands;
mod document;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use diagred::instances::{HurwitzRing, IntegerRing, Mat2F2Ring, ModularRing, PolyRing, RingSelector};
use diagred::oracle::DEFAULT_SEED;
use diagred::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("invalid matrix document: {0}")]
    Document(String),
    #[error("{place}: {error}")]
    Element { place: String, error: ParseError },
    #[error(transparent)]
    Core(#[from] diagred::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckLevel {
    /// Re-multiplication and chain checks only.
    Fast,
    /// Also consult the independent oracle, and sweep more cases.
    Full,
}

impl CheckLevel {
    pub fn sample_cap(self) -> usize {
        match self {
            CheckLevel::Fast => 1_000,
            CheckLevel::Full => 10_000,
        }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let digits = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")).unwrap_or(s);
    u64::from_str_radix(digits, 16).map_err(|e| format!("seed must be hexadecimal: {e}"))
}

/// Exact diagonal reduction of matrices over Bezout rings.
#[derive(Debug, Parser)]
#[command(name = "diagred", version)]
struct Cli {
    /// Ring selector: int, polyq, zmod:<n>, hurwitz or mat2f2.
    #[arg(long, global = true)]
    ring: Option<RingSelector>,
    /// Matrix document to read; standard input when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Where to write the result; standard output when absent.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Hexadecimal seed for sampled checks.
    #[arg(long, global = true, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest number of terms tried when searching for simple witnesses.
    #[arg(long, global = true, default_value_t = 3)]
    max_n: usize,
    #[arg(long, global = true, value_enum, default_value_t = CheckLevel::Fast)]
    check_level: CheckLevel,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diagonalize a matrix document and certify the transforms.
    Reduce,
    /// Report unit, duo, coboundary and simple-witness facts for one element.
    Analyze { element: String },
    /// Run reductions, invariance words and finite sweeps.
    Selftest,
    /// Exhaustive invariant sweep over a finite ring.
    Oracle,
}

/// Binds `$r` to the ring named by `$sel` and evaluates `$body`.
macro_rules! with_ring {
    ($sel:expr, |$r:ident| $body:expr) => {
        match $sel {
            RingSelector::Integers => {
                let $r = &IntegerRing;
                $body
            }
            RingSelector::RationalPolynomials => {
                let $r = &PolyRing;
                $body
            }
            RingSelector::Modular(n) => {
                let $r = &ModularRing::new(n)?;
                $body
            }
            RingSelector::Hurwitz => {
                let $r = &HurwitzRing;
                $body
            }
            RingSelector::Mat2F2 => {
                let $r = &Mat2F2Ring;
                $body
            }
        }
    };
}

struct Outcome {
    text: String,
    ok: bool,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) => text = std::fs::read_to_string(p)?,
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values always serialize") + "\n"
}

fn need_ring(cli: &Cli) -> Result<RingSelector, CliError> {
    cli.ring.ok_or_else(|| CliError::Usage("--ring is required for this command".into()))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Reduce => {
            let doc = document::read(&read_input(cli.input.as_ref())?)?;
            if let Some(r) = cli.ring {
                if r != doc.ring {
                    return Err(CliError::Usage(format!("--ring {r} does not match document ring {}", doc.ring)));
                }
            }
            with_ring!(doc.ring, |ring| {
                let a = document::parse_matrix(ring, &doc)?;
                let (value, ok) = commands::reduce(ring, &a, cli.check_level)?;
                Ok(Outcome { text: pretty(&value), ok })
            })
        }
        Command::Analyze { element } => with_ring!(need_ring(cli)?, |ring| {
            let value = commands::analyze(ring, element, cli.max_n)?;
            Ok(Outcome { text: pretty(&value), ok: true })
        }),
        Command::Oracle => with_ring!(need_ring(cli)?, |ring| {
            let (text, ok) = commands::oracle(ring, cli.seed, cli.check_level)?;
            Ok(Outcome { text: text + "\n", ok })
        }),
        Command::Selftest => {
            let rings = match cli.ring {
                Some(r) => vec![r],
                None => vec![
                    RingSelector::Integers,
                    RingSelector::RationalPolynomials,
                    RingSelector::Modular(6),
                    RingSelector::Hurwitz,
                    RingSelector::Mat2F2,
                ],
            };
            let mut lines = Vec::new();
            for sel in rings {
                lines.extend(with_ring!(sel, |ring| commands::selftest(ring, cli.seed, cli.check_level)));
            }
            let ok = lines.iter().all(|(_, passed)| *passed);
            let mut text = String::new();
            for (line, passed) in &lines {
                text += &format!("{} {line}\n", if *passed { "PASS" } else { "FAIL" });
            }
            text += &format!("result: {}\n", if ok { "PASS" } else { "FAIL" });
            Ok(Outcome { text, ok })
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(e) = emit(cli.output.as_ref(), &outcome.text) {
                eprintln!("diagred: {e}");
                return ExitCode::from(2);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("diagred: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("diagred: {e}");
            ExitCode::from(2)
        }
    }
}

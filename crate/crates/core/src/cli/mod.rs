//! Command-line front end. [`run`] is the whole program; the binary only
//! forwards process arguments and streams.

mod commands;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::footprint::ProductSpec;

/// Environment variable overriding the dense-matrix length cap.
pub const MATRIX_CAP_ENV: &str = "CARTQEC_MATRIX_CAP";

#[derive(Debug, Parser)]
#[command(name = "cartqec", version, about = "Improved evaluation codes on Cartesian products and their quantum codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classical, CSS and enlarged parameters for one delta
    Params(ParamsArgs),
    /// Table of CSS and enlarged codes over a delta range
    Table(TableArgs),
    /// Footprint values sigma over all exponents (m <= 3)
    Grid(GridArgs),
    /// Number of exponents with a given footprint value
    Tau(TauArgs),
    /// Check the combinatorial claims against explicit matrices
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct SpecArgs {
    /// Characteristic
    #[arg(long)]
    p: u64,
    /// Subfield degrees, non-increasing, comma separated
    #[arg(long, value_delimiter = ',', required = true, num_args = 1)]
    r: Vec<u32>,
    /// Ambient field order (a power of p)
    #[arg(long, conflicts_with = "ambient_r")]
    q: Option<u64>,
    /// Ambient extension degree (default: lcm of r)
    #[arg(long = "ambient-r")]
    ambient_r: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    None,
    Matrix,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

/// `a` or the inclusive range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Range {
    lo: u64,
    hi: u64,
}

impl Range {
    fn single(self) -> Option<u64> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("`{t}` is not a non-negative integer"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (lo, hi) = (num(a)?, num(b)?);
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok(Range { lo, hi })
        }
        None => num(s).map(|v| Range { lo: v, hi: v }),
    }
}

#[derive(Debug, Args)]
struct ParamsArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_parser = parse_range)]
    delta: Range,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Single delta or inclusive range a..b
    #[arg(long, value_parser = parse_range)]
    delta: Range,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct TauArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Footprint value or range; default all values 1..n
    #[arg(long, value_parser = parse_range)]
    s: Option<Range>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Single delta or inclusive range a..b; default 2..n+1
    #[arg(long, value_parser = parse_range)]
    delta: Option<Range>,
    #[arg(long, value_enum, default_value_t = Level::Matrix)]
    level: Level,
    /// Write the generator matrix of C(L(delta)) to this file
    #[arg(long)]
    dump: Option<PathBuf>,
    #[command(flatten)]
    output: OutputArgs,
}

/// Failure classes and their exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Hypothesis(String),
    Verification,
    Io(std::io::Error),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => 1,
            Failure::Hypothesis(_) => 2,
            Failure::Verification => 3,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e)
    }
}

fn build_spec(a: &SpecArgs) -> Result<ProductSpec, Failure> {
    let usage = |e: &dyn std::fmt::Display| Failure::Usage(e.to_string());
    let spec = ProductSpec::new(a.p, &a.r).map_err(|e| usage(&e))?;
    let ambient = match (a.q, a.ambient_r) {
        (Some(q), _) => Some(degree_of(a.p, q).ok_or_else(|| Failure::Usage(format!("--q {q} is not a power of p={}", a.p)))?),
        (None, r) => r,
    };
    match ambient {
        Some(r) => ProductSpec::with_ambient(a.p, &a.r, r).map_err(|e| usage(&e)),
        None => Ok(spec),
    }
}

fn degree_of(p: u64, q: u64) -> Option<u32> {
    let (mut v, mut e) = (q, 0u32);
    while v > 1 && p > 1 && v % p == 0 {
        v /= p;
        e += 1;
    }
    (v == 1 && e > 0).then_some(e)
}

fn matrix_cap() -> u64 {
    std::env::var(MATRIX_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(crate::evalcode::DEFAULT_MATRIX_CAP)
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code: 0 success, 1 usage, 2 failed hypothesis or out-of-range
/// delta, 3 failed verification.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (output, result) = match &cli.command {
        Command::Params(a) => (&a.output, commands::params(a, err)),
        Command::Table(a) => (&a.output, commands::table(a, err)),
        Command::Grid(a) => (&a.output, commands::grid(a)),
        Command::Tau(a) => (&a.output, commands::tau(a)),
        Command::Verify(a) => (&a.output, commands::verify(a, err)),
    };
    let (text, failure) = match result {
        Ok(text) => (Some(text), None),
        Err((text, f)) => (text, Some(f)),
    };
    if let Some(text) = text {
        let written = match &output.out {
            Some(path) => std::fs::write(path, text.as_bytes()),
            None => out.write_all(text.as_bytes()),
        };
        if let Err(e) = written {
            let _ = writeln!(err, "error: cannot write output: {e}");
            return 1;
        }
    }
    match failure {
        None => 0,
        Some(f) => {
            match &f {
                Failure::Usage(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
                Failure::Hypothesis(m) => {
                    let _ = writeln!(err, "hypothesis failed: {m}");
                }
                Failure::Io(e) => {
                    let _ = writeln!(err, "error: {e}");
                }
                Failure::Verification => {
                    let _ = writeln!(err, "verification failed");
                }
            }
            f.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4"), Ok(Range { lo: 4, hi: 4 }));
        assert_eq!(parse_range("3..8"), Ok(Range { lo: 3, hi: 8 }));
        assert!(parse_range("8..3").is_err());
        assert!(parse_range("x").is_err());
        assert!(parse_range("3..").is_err());
    }

    #[test]
    fn field_degree() {
        assert_eq!(degree_of(2, 8), Some(3));
        assert_eq!(degree_of(3, 9), Some(2));
        assert_eq!(degree_of(2, 12), None);
        assert_eq!(degree_of(5, 1), None);
    }

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cartqec").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["params", "--p", "4", "--r", "1", "--delta", "2"]).0, 1);
        assert_eq!(run_str(&["params", "--p", "2", "--r", "1,2", "--delta", "2"]).0, 1);
        assert_eq!(run_str(&["params", "--p", "2", "--r", "3", "--q", "12", "--delta", "2"]).0, 1);
        assert_eq!(run_str(&["bogus"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}

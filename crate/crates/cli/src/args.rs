use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cik_core::clark_ismail::{Method, Quantity};

#[derive(Debug, Parser)]
#[command(name = "cik", version, about = "Exact derivatives and Maclaurin coefficients of v^j/(1-e^-v)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate G_j^(k)(0), gamma(j,k) or C(j,k).
    Table(TableArgs),
    /// Run an invariant suite.
    Verify(VerifyArgs),
    /// Search gamma(j,k) or C(j,k) for negative values.
    Scan(ScanArgs),
    /// Evaluate G_j^(k)(v), f_j(v) or the lower-bound series numerically.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    #[value(name = "G")]
    G,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "C")]
    C,
}

impl TableKind {
    pub fn quantity(self) -> Quantity {
        match self {
            TableKind::G => Quantity::G,
            TableKind::Gamma => Quantity::Gamma,
            TableKind::C => Quantity::C,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "C")]
    C,
}

impl ScanKind {
    pub fn quantity(self) -> Quantity {
        match self {
            ScanKind::Gamma => Quantity::Gamma,
            ScanKind::C => Quantity::C,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    StirlingSum,
    ClosedForm,
    BernoulliForm,
    Determinantal,
    Recursion,
    SeriesOracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::StirlingSum => Method::StirlingSum,
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::BernoulliForm => Method::BernoulliForm,
            MethodArg::Determinantal => Method::Determinantal,
            MethodArg::Recursion => Method::Recursion,
            MethodArg::SeriesOracle => Method::SeriesOracle,
        }
    }
}

/// Parses `A..B` (inclusive) or a single `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bound = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid range bound {t:?} in {s:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => bound(a)?..=bound(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let a = bound(s)?;
            a..=a
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub kind: TableKind,
    /// Rows, e.g. 1..9
    #[arg(long, value_parser = parse_range, default_value = "1..9")]
    pub j: RangeInclusive<usize>,
    /// Columns, e.g. 0..9
    #[arg(long, value_parser = parse_range, default_value = "0..9")]
    pub k: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Route used for the printed values.
    #[arg(long, value_enum, default_value = "bernoulli-form")]
    pub method: MethodArg,
    /// Check every route against the embedded reference tables; exit 1 on a mismatch.
    #[arg(long)]
    pub golden: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Routes,
    Bell,
    Hessenberg,
    Series,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long, default_value_t = 9)]
    pub jmax: usize,
    #[arg(long, default_value_t = 12)]
    pub kmax: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub kind: ScanKind,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jmax: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub kmax: u64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Write the CSV of negative cells here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalTarget {
    #[value(name = "G")]
    G,
    #[value(name = "f")]
    F,
    #[value(name = "bound")]
    Bound,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub target: EvalTarget,
    #[arg(long)]
    pub j: usize,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub v: f64,
    /// Terms of the lower-bound series.
    #[arg(long, default_value_t = 5)]
    pub terms: usize,
}

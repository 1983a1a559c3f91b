use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use relprime_core::oracle::DEFAULT_ENUMERATION_CAP;
use relprime_core::{ElementSet, MeetMode};

use crate::family::{Family, Param, Params};

#[derive(Debug, Parser)]
#[command(
    name = "relprime",
    version,
    about = "Exact counts of relatively prime subsets, checked against brute-force enumeration"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Print the individual terms of each divisor sum.
    #[arg(long, global = true)]
    pub verbose: bool,

    /// Largest universe the brute-force oracle will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub oracle_cap: usize,

    /// Seed for sampled verification grids.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one family at one parameter point.
    Eval(EvalArgs),
    /// Tabulate a family over parameter ranges (l..m inclusive).
    Table(TableArgs),
    /// Compare closed forms with the brute-force oracle over a grid.
    Check(CheckArgs),
    /// Time the closed form against subset enumeration (JSON output).
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    pub family: Family,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Timed repetitions of each leg.
    #[arg(long, default_value_t = 5)]
    pub reps: u32,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Families to verify; all of them when omitted.
    pub families: Vec<Family>,
    #[arg(long, default_value_t = 10)]
    pub max_m: u64,
    #[arg(long, default_value_t = 15)]
    pub max_n: u64,
    /// Random instances per sampled family (superset and meet families).
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Largest meet set drawn for the meet families.
    #[arg(long, default_value_t = 4)]
    pub max_meet: usize,
    #[arg(long, default_value = "inclusion-exclusion")]
    pub mode: MeetMode,
}

/// Family parameters as given on the command line. Numeric values accept a
/// single integer or an inclusive range `a..b`; sets are comma-separated.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub l: Option<ValueRange>,
    #[arg(long)]
    pub m: Option<ValueRange>,
    #[arg(long)]
    pub n: Option<ValueRange>,
    #[arg(long)]
    pub k: Option<ValueRange>,
    #[arg(long)]
    pub m1: Option<ValueRange>,
    #[arg(long)]
    pub l2: Option<ValueRange>,
    #[arg(long)]
    pub m2: Option<ValueRange>,
    #[arg(long, value_parser = parse_set)]
    pub base: Option<ElementSet>,
    #[arg(long, value_parser = parse_set)]
    pub meet: Option<ElementSet>,
    #[arg(long, default_value = "inclusion-exclusion")]
    pub mode: MeetMode,
}

impl ParamArgs {
    pub fn range(&self, p: Param) -> Option<ValueRange> {
        match p {
            Param::L => self.l,
            Param::M => self.m,
            Param::N => self.n,
            Param::K => self.k,
            Param::M1 => self.m1,
            Param::L2 => self.l2,
            Param::M2 => self.m2,
            Param::Base | Param::Meet => None,
        }
    }

    /// Parameters with every numeric value fixed to the start of its range;
    /// the caller decides whether ranges are allowed.
    pub fn base_params(&self) -> Params {
        let mut p = Params {
            base: self.base.clone(),
            meet: self.meet.clone(),
            mode: self.mode,
            ..Params::default()
        };
        for param in [Param::L, Param::M, Param::N, Param::K, Param::M1, Param::L2, Param::M2] {
            if let Some(r) = self.range(param) {
                p.set_numeric(param, r.start);
            }
        }
        p
    }
}

/// An inclusive integer range; a bare integer is the one-point range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueRange {
    pub start: u64,
    pub end: u64,
}

impl ValueRange {
    pub fn is_point(&self) -> bool {
        self.start == self.end
    }

    pub fn len(&self) -> u64 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for ValueRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("invalid integer '{t}': {e}"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(Self { start, end })
    }
}

pub fn parse_set(s: &str) -> Result<ElementSet, String> {
    let values = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|e| format!("invalid element '{t}': {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    ElementSet::new(values).map_err(|e| e.to_string())
}

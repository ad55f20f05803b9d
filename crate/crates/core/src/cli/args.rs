use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::hyper::HyperParams;
use crate::rat::Rat;

fn rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|e| e.to_string())
}

/// Comma-separated rationals as one argument.
#[derive(Clone, Debug)]
pub struct RatList(pub Vec<Rat>);

fn rat_list(s: &str) -> Result<RatList, String> {
    crate::rat::parse_list(s)
        .map(RatList)
        .map_err(|e| e.to_string())
}

fn params(s: &str) -> Result<HyperParams, String> {
    s.parse::<HyperParams>().map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Exact Laguerre-Polya class tests for generalized hypergeometric functions.
#[derive(Debug, Parser)]
#[command(name = "polya-gate", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// S-fraction depth (default 12 for `check`, `n` for scans and thresholds)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub depth: Option<u32>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Worker threads for parallel commands
    #[arg(long, global = true, env = "POLYA_GATE_THREADS",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,

    /// Seed for sampling commands
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sign test for pFq with parameters "a1,..;b1,.."
    Check {
        #[arg(value_parser = params)]
        params: HyperParams,
    },
    /// alpha_n signs of 1F2(b1+gamma; b1, b2) over a (gamma, b2) grid
    Scan(ScanArgs),
    /// Bisection in b2 for the sign change of alpha_n
    Threshold(ThresholdArgs),
    /// Leading-coefficient check of the alpha_n numerator in b2, or
    /// denominator sampling with --samples
    Symbolic(SymbolicArgs),
    /// Coefficientwise check of a series identity
    Identity {
        #[command(subcommand)]
        which: IdentityCmd,
    },
    /// Reduction to a Laguerre-type polynomial and its real-root count
    Laguerre {
        #[arg(long, value_parser = rat)]
        b: Rat,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, value_parser = rat)]
    pub b1: Rat,
    /// Comma-separated gamma values
    #[arg(long, value_parser = rat_list)]
    pub gammas: RatList,
    /// Comma-separated b2 values
    #[arg(long, value_parser = rat_list)]
    pub b2s: RatList,
    #[arg(long = "n-max")]
    pub n_max: usize,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long, value_parser = rat)]
    pub b1: Rat,
    #[arg(long, value_parser = rat)]
    pub gamma: Rat,
    #[arg(long)]
    pub n: usize,
    /// Lower end (default 1 for n = 3, 100 for n = 5)
    #[arg(long, value_parser = rat)]
    pub lo: Option<Rat>,
    /// Upper end (default 100 for n = 3, 1000 for n = 5)
    #[arg(long, value_parser = rat)]
    pub hi: Option<Rat>,
    #[arg(long, value_parser = rat, default_value = "1/1000")]
    pub prec: Rat,
}

#[derive(Debug, Args)]
pub struct SymbolicArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = rat, required_unless_present = "samples")]
    pub gamma: Option<Rat>,
    #[arg(long, value_parser = rat, required_unless_present = "samples")]
    pub b1: Option<Rat>,
    /// Sample the denominator-positivity claim instead
    #[arg(long, conflicts_with_all = ["gamma", "b1"])]
    pub samples: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum IdentityCmd {
    Driver {
        #[arg(long, value_parser = rat)]
        a: Rat,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
    Bailey {
        #[arg(long, value_parser = rat)]
        a: Rat,
        #[arg(long, value_parser = rat)]
        b: Rat,
        #[arg(long, default_value_t = 30)]
        order: usize,
    },
}

//! Command-line grammar.

use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qdivisor-lab",
    version,
    about = "Divisor-window function F(n), the q-analog P_n(q) of the sum of divisors, \
             and the Pythagorean perimeter criterion",
    max_term_width = 100
)]
pub struct Cli {
    /// Output format (defaults: human; scan defaults to bfile).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Cache directory for scan results; overrides QDIVISOR_LAB_CACHE_DIR.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    /// Worker threads for scans (default: available parallelism).
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<NonZeroUsize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the polynomial P_n(q) in descending powers.
    Poly { n: u64 },

    /// Print F(n) with its witness divisor chain.
    #[command(name = "fn")]
    FValue { n: u64 },

    /// Bulk-compute F(n) or the largest coefficient of P_n(q) over a range.
    Scan {
        start: u64,
        end: u64,
        what: ScanKind,
    },

    /// Run the cross-check suites and report pass/fail per suite.
    Verify {
        /// Upper bound for the exhaustive suites (required, at least 1).
        #[arg(long = "max-n", value_name = "N")]
        max_n: u64,

        /// Order of the series-expansion comparison (1..=500).
        #[arg(long = "oracle-max", value_name = "M", default_value_t = 50)]
        oracle_max: u64,
    },

    /// Decide whether 2n is the perimeter of a Pythagorean triangle.
    Perimeter { n: u64 },

    /// Running mean of F(n) for n <= x at each checkpoint x.
    Mean {
        #[arg(value_name = "X", num_args = 1.., required = true)]
        checkpoints: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
    Bfile,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    /// The divisor-window function F(n).
    #[value(name = "F", alias = "f")]
    F,
    /// The largest coefficient of P_n(q).
    #[value(name = "maxcoeff")]
    MaxCoeff,
}

impl ScanKind {
    /// Stem of the cache file for this quantity.
    pub fn cache_stem(self) -> &'static str {
        match self {
            ScanKind::F => "F",
            ScanKind::MaxCoeff => "maxcoeff",
        }
    }
}

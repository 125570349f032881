use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use supercong::search::IntRange;

#[derive(Debug, Parser)]
#[command(
    name = "supercong",
    version,
    about = "Exact verification of two-term supercongruences"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Worker threads; 1 runs everything on the main thread.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Directory of cached sequence values.
    #[arg(long, global = true, env = "SUPERCONG_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Append every result as a JSON line to this ledger file.
    #[arg(long, global = true, env = "SUPERCONG_LEDGER")]
    pub ledger: Option<PathBuf>,
    /// Treat failures of conjectural checks as fatal.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Check deeper: double search depth, more samples, more primes.
    #[arg(long, global = true)]
    pub deep: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print exact values of a sequence.
    Compute(ComputeArgs),
    /// Run a family of congruence checks.
    Verify(VerifyArgs),
    /// Search recurrence parameters for integral solutions.
    Search(SearchArgs),
    /// Coefficients of the weight-4 eta product.
    Eta(EtaArgs),
    /// Summarize a ledger file.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Catalog name (apery, s7, s18, zagier-a, ...) or family `S:a,b,c`,
    /// `T:a,b,c,d,e`, `U:eps,a,b`.
    pub sequence: String,
    /// Indices, e.g. `0..10`, `5` or `1,4,9`.
    #[arg(long, default_value = "0..10")]
    pub n: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// thm1.2, thm1.3, tables, conj1.1, conj23, lemmas, eta-beukers,
    /// vanhamme, example3.1, example3.2, example3.3, crosscheck.
    pub target: String,
    /// Primes, e.g. `5,7,11` or `5..13`.
    #[arg(long)]
    pub primes: Option<String>,
    /// Multipliers, e.g. `1..2` or `1,3`.
    #[arg(long)]
    pub m: Option<String>,
    /// Powers, e.g. `1..2`.
    #[arg(long)]
    pub r: Option<String>,
    /// S-family exponents A (thm1.2).
    #[arg(long = "family-a")]
    pub family_a: Option<String>,
    /// S-family exponents B (thm1.2).
    #[arg(long = "family-b")]
    pub family_b: Option<String>,
    /// S-family exponents C (thm1.2).
    #[arg(long = "family-c")]
    pub family_c: Option<String>,
    /// Randomized instances per lemma.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Seed for lemma sampling.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Depth of the sum/recurrence comparison (crosscheck).
    #[arg(long, default_value_t = 60)]
    pub nmax: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Cubic,
    Quadratic,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value = "cubic")]
    pub model: Model,
    #[arg(long, allow_hyphen_values = true, default_value = "0..20")]
    pub a: IntRange,
    #[arg(long, allow_hyphen_values = true, default_value = "0..8")]
    pub b: IntRange,
    /// Defaults to -200..200 (cubic) or -100..100 (quadratic).
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<IntRange>,
    /// Cubic model only.
    #[arg(long, allow_hyphen_values = true, default_value = "-15..15")]
    pub d: IntRange,
    /// Terms required to be integral.
    #[arg(long, default_value_t = 50)]
    pub nmax: u64,
}

#[derive(Debug, Args)]
pub struct EtaArgs {
    /// Last exponent of q to print.
    #[arg(long, default_value_t = 100)]
    pub nmax: usize,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Ledger file (JSON lines).
    pub ledger_file: PathBuf,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "trioct",
    version,
    about = "Generalized Tribonacci octonion sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit scalar terms V_n.
    Seq(RangeCmd),
    /// Emit octonion terms O_n.
    Oct(OctCmd),
    /// Print the roots of the characteristic cubic and the closed-form weights.
    Roots(ParamCmd),
    /// Print the generating function numerator and denominator.
    Genfunc(ParamCmd),
    /// Emit partial sums from the closed form.
    Sum(SumCmd),
    /// Run the identity verification suite.
    Verify(VerifyCmd),
}

#[derive(Debug, Args)]
pub struct ParamSource {
    /// Named parameter set (`all` is accepted by `verify`).
    #[arg(long)]
    pub preset: Option<String>,
    /// Parameter file with `key = value` lines for r, s, t, v0, v1, v2.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v2: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Jsonl,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportArg {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamCmd {
    #[command(flatten)]
    pub source: ParamSource,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RangeCmd {
    #[command(flatten)]
    pub source: ParamSource,
    /// Index `A` or inclusive span `A..B`.
    #[arg(long, default_value = "0..10")]
    pub n: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OctCmd {
    #[command(flatten)]
    pub range: RangeCmd,
    /// Emit O_{n+M} through the index-shift identity (M >= 3).
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SumCmd {
    #[command(flatten)]
    pub range: RangeCmd,
    /// Sum octonion terms instead of scalar terms.
    #[arg(long)]
    pub octonion: bool,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    #[command(flatten)]
    pub source: ParamSource,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    /// Largest index shift checked.
    #[arg(long, default_value_t = 20)]
    pub m: usize,
    /// Number of seeded random integer parameter sets.
    #[arg(long, default_value_t = 50)]
    pub random: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportArg,
    #[command(flatten)]
    pub output: Output,
}

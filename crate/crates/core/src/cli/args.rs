use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "ffhalton",
    version,
    about = "Halton-type sequences from global function fields"
)]
pub struct Cli {
    /// Worker threads for parallel generation and checks.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output file; stdout when absent. A `<out>.config.json` echo is written alongside.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Emit points of the sequence as CSV or JSON.
    Gen(GenArgs),
    /// Check one block (or a CSV point file) for the net property.
    CheckNet(CheckNetArgs),
    /// Check many blocks of the sequence.
    CheckSeq(CheckSeqArgs),
    /// Check the block structure of the index-to-function map.
    Lemma1(Lemma1Args),
    /// Exact star discrepancy of the first points.
    Discrepancy(DiscrepancyArgs),
    /// Compare the leading discrepancy constants.
    Bounds(BoundsArgs),
    /// Classical Halton points.
    Halton(HaltonArgs),
    /// Re-run a command from an echoed configuration (JSON or an output file header).
    #[serde(skip)]
    Replay { config: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OutputMode {
    #[default]
    Digits,
    Real,
    Json,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenArgs {
    /// e.g. "rational(q=2)" or "hyperelliptic(q=5, f=x^3+x+1)"
    #[arg(long)]
    pub model: String,
    /// "auto:s=3", "x,x^2+x+1" or "(0,1),(0,4)"
    #[arg(long)]
    pub places: String,
    #[arg(long)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub start: u64,
    /// Base-q digits per coordinate.
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = OutputMode::Digits)]
    pub mode: OutputMode,
    /// Decimal places in real mode.
    #[arg(long, default_value_t = 10)]
    pub decimals: usize,
    /// Custom digit bijection table for eta, comma separated, fixing 0.
    #[arg(long)]
    pub eta: Option<String>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckNetArgs {
    #[arg(long, required_unless_present = "input")]
    pub model: Option<String>,
    #[arg(long, required_unless_present = "input")]
    pub places: Option<String>,
    /// Digit CSV as written by `gen --mode digits`; replaces model/places.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Base of the digits in `--input`.
    #[arg(long)]
    pub base: Option<u32>,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// Defaults to the genus (0 for input files).
    #[arg(long)]
    pub u: Option<usize>,
    /// Defaults to the place degrees (all ones for input files).
    #[arg(long)]
    pub e: Option<String>,
    /// Also report the smallest passing u.
    #[arg(long, default_value_t = false)]
    pub minimal_u: bool,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSeqArgs {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub places: String,
    #[arg(long)]
    pub u: Option<usize>,
    #[arg(long)]
    pub e: Option<String>,
    /// Inclusive range "lo..hi".
    #[arg(long)]
    pub m: String,
    #[arg(long, default_value = "0..0")]
    pub k: String,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Args {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub m: String,
    #[arg(long, default_value = "0..0")]
    pub k: String,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyArgs {
    #[arg(long)]
    pub model: String,
    #[arg(long)]
    pub places: String,
    #[arg(long)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub start: u64,
    /// Digits per coordinate; the discrepancy is that of the truncated points.
    #[arg(long, default_value_t = 16)]
    pub m: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsArgs {
    #[arg(long)]
    pub q: u32,
    /// Defaults to the length of `--e`.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub g: usize,
    #[arg(long)]
    pub e: String,
}

#[derive(Args, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HaltonArgs {
    /// Pairwise coprime bases, comma separated.
    #[arg(long)]
    pub bases: String,
    #[arg(long)]
    pub count: u64,
    #[arg(long, default_value_t = 0)]
    pub start: u64,
    #[arg(long, value_enum, default_value_t = OutputMode::Digits)]
    pub mode: OutputMode,
    #[arg(long, default_value_t = 10)]
    pub decimals: usize,
}

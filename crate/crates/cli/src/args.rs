use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "nnrep", version, about = "Build and verify nearest-neighbor representations of threshold circuits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct anchors for a named family or a circuit file.
    Build(BuildArgs),
    /// Check an anchor set against a circuit on every input.
    Verify(VerifyArgs),
    /// Rebuild and verify every family over a range of sizes.
    Table(TableArgs),
    /// Write two-dimensional plot data for small examples.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    AndEq,
    OrEq,
    ParityEq,
    ParityComp,
    Ip2,
    OmbEq,
    /// Linear decision list read from --circuit.
    LdlFile,
    /// Exact decision list read from --circuit.
    EdlFile,
    /// AND of threshold gates read from --circuit.
    PolytopeFile,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DemoKind {
    And2,
    Or2,
    #[value(name = "polytope-2d")]
    Polytope2d,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long)]
    pub family: FamilyArg,
    /// Number of first-layer gates.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=8))]
    pub m: u32,
    /// Bits per compared integer (pairs of bits for ip2).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=8))]
    pub n: u32,
    /// Circuit JSON for the *-file families.
    #[arg(long)]
    pub circuit: Option<PathBuf>,
    /// Output directory for circuit.json and anchors.{json,csv}.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub circuit: PathBuf,
    /// Anchor set as JSON, or CSV when the file ends in `.csv`.
    #[arg(long)]
    pub anchors: PathBuf,
    /// Report JSON destination; printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = nnrep_core::verify::DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest gate count.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=4))]
    pub m: u32,
    /// Largest bit width.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=3))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    pub format: TableFormat,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = nnrep_core::verify::DEFAULT_MAX_BITS)]
    pub max_bits: usize,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    #[arg(long)]
    pub family: DemoKind,
    /// Output directory for anchors.csv, vertices.csv and bisectors.csv.
    #[arg(long)]
    pub out: PathBuf,
}

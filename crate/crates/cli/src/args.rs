use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "tenfold", version, about = "Clifford algebras, the tenfold way and band topology")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// With `--format json`, print only the result payload.
    #[arg(long, global = true)]
    pub bare: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure of Cl_{n,s} for rows s and columns n.
    Chessboard(ChessboardArgs),
    /// Matrix-algebra type of one Clifford algebra.
    Classify(ClassifyArgs),
    /// Grothendieck groups, restriction quotients and KO/K groups.
    Groups(FamilyArgs),
    /// KO^{-(s-n)}(pt) (or K) grid.
    KoTable(FamilyArgs),
    /// Index type of Cl*_{s-n}-linear Dirac operators.
    IndexTable(FamilyArgs),
    /// The ten symmetry classes and their groups in dimensions 0..7.
    PeriodicTable,
    /// Â or Todd series, optionally evaluated on characteristic numbers.
    Genus(GenusArgs),
    /// Operations on JSON model files.
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// Chern number of the lower bands.
    Chern(ChernArgs),
    /// Z2 index of a time-reversal invariant model.
    Z2(Z2Args),
    /// Haldane Chern number over a (φ, M/t2) grid.
    PhaseDiagram(PhaseDiagramArgs),
    /// Run every consistency suite; exit 1 on the first mismatch.
    VerifyAll,
}

#[derive(Debug, Args, Serialize)]
pub struct ChessboardArgs {
    #[arg(long, default_value_t = 8)]
    pub rows: u32,
    #[arg(long, default_value_t = 8)]
    pub cols: u32,
}

#[derive(Debug, Args, Serialize)]
pub struct ClassifyArgs {
    /// Generators squaring to -1.
    #[arg(long, default_value_t = 0)]
    pub p: u32,
    /// Generators squaring to +1.
    #[arg(long, default_value_t = 0)]
    pub q: u32,
    /// Classify the complex algebra on N generators instead.
    #[arg(long, conflicts_with_all = ["p", "q"])]
    pub n: Option<u32>,
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    #[arg(long, conflicts_with = "complex")]
    pub real: bool,
    #[arg(long)]
    pub complex: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesArg {
    Ahat,
    Todd,
}

#[derive(Debug, Args, Serialize)]
pub struct GenusArgs {
    #[arg(long, value_enum)]
    pub series: SeriesArg,
    /// Highest real degree kept.
    #[arg(long)]
    pub degree: u32,
    /// JSON object mapping monomials to rational characteristic numbers.
    #[arg(long)]
    pub eval: Option<PathBuf>,
    /// Clifford degree for the index prescription; defaults to the dimension.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
}

#[derive(Debug, Subcommand)]
pub enum ModelAction {
    /// Check an antiunitary symmetry and detect the symmetry class.
    Check(ModelCheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum SymmetryArg {
    #[value(name = "T", alias = "t")]
    T,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Debug, Args, Serialize)]
pub struct ModelCheckArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t = SymmetryArg::T)]
    pub symmetry: SymmetryArg,
    #[arg(long, default_value_t = 12)]
    pub grid: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Haldane,
    KaneMele,
}

#[derive(Debug, Args, Serialize)]
pub struct ChernArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Haldane)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t1: f64,
    #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
    pub t2: f64,
    #[arg(long, default_value_t = FRAC_PI_2, allow_hyphen_values = true)]
    pub phi: f64,
    #[arg(long = "M", default_value_t = 0.0, allow_hyphen_values = true)]
    #[serde(rename = "M")]
    pub m: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long, default_value_t = 0.06, allow_hyphen_values = true)]
    pub lso: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lr: f64,
    #[arg(long, default_value_t = 24)]
    pub grid: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct Z2Args {
    #[arg(long, value_enum, default_value_t = ModelKind::KaneMele)]
    pub model: ModelKind,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long, default_value_t = 0.06, allow_hyphen_values = true)]
    pub lso: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub lr: f64,
    #[arg(long = "M", default_value_t = 0.1, allow_hyphen_values = true)]
    #[serde(rename = "M")]
    pub m: f64,
    #[arg(long, default_value_t = 24)]
    pub grid: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct PhaseDiagramArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Haldane)]
    pub model: ModelKind,
    /// Write the CSV here instead of printing it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub t1: f64,
    #[arg(long, default_value_t = 0.2, allow_hyphen_values = true)]
    pub t2: f64,
    #[arg(long, default_value_t = 41)]
    pub resolution: usize,
    #[arg(long, default_value_t = 24)]
    pub grid: usize,
}

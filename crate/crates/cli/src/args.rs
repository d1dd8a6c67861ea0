use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "meb-kit", version, about = "Minimum enclosing balls, cluster testers and diameters")]
pub struct Cli {
    /// Point file (CSV rows or {"points": [[...], ...]}).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    /// Point file format; inferred from the extension when omitted.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Master seed for every random choice in the run.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum enclosing ball.
    Meb(MebArgs),
    /// Minimum k-enclosing ball, exact or sampled with outliers.
    Mkeb(MkebArgs),
    /// Diameter, exact or estimated.
    Diameter(DiameterArgs),
    /// Sampled cluster testers.
    TestCluster(TestClusterArgs),
    /// Enclosing-radius bounds.
    Bounds(BoundsArgs),
    /// Helly-type constructions.
    Convexity(ConvexityArgs),
    /// Generate a random instance.
    Gen(GenArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Meb(_) => "meb",
            Command::Mkeb(_) => "mkeb",
            Command::Diameter(_) => "diameter",
            Command::TestCluster(_) => "test-cluster",
            Command::Bounds(_) => "bounds",
            Command::Convexity(_) => "convexity",
            Command::Gen(_) => "gen",
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MebAlgo {
    Exact,
    Bc,
    Eh,
    Hr,
}

#[derive(Debug, Args, Serialize)]
pub struct MebArgs {
    #[arg(long, value_enum, default_value = "exact")]
    pub algo: MebAlgo,
    /// Iterations for the core-set algorithm.
    #[arg(long, default_value_t = 100)]
    pub k: usize,
    /// Relative duality-gap target for the dual solver.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    /// Iteration limit for the dual solver.
    #[arg(long, default_value_t = 200_000)]
    pub max_iter: usize,
}

#[derive(Debug, Args, Serialize)]
pub struct MkebArgs {
    /// Number of points to cover.
    #[arg(long, conflicts_with = "z")]
    pub k: Option<usize>,
    /// Number of outliers allowed (k = n - z).
    #[arg(long)]
    pub z: Option<usize>,
    /// Use the sampled outlier variant instead of enumeration.
    #[arg(long)]
    pub sample: bool,
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiameterAlgo {
    Brute,
    Calipers,
    Sweep,
    Stream2,
    Streameps,
}

#[derive(Debug, Args, Serialize)]
pub struct DiameterArgs {
    #[arg(long, value_enum, default_value = "brute")]
    pub algo: DiameterAlgo,
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TestMode {
    #[value(name = "1s")]
    #[serde(rename = "1s")]
    OneS,
    Kg,
    Outliers,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BodyKind {
    Ball,
    Box,
}

#[derive(Debug, Args, Serialize)]
pub struct TestClusterArgs {
    #[arg(long, value_enum)]
    pub mode: TestMode,
    /// Shape tested against.
    #[arg(long, value_enum, default_value = "ball")]
    pub body: BodyKind,
    /// Ball radius.
    #[arg(long, default_value_t = 1.0)]
    pub radius: f64,
    /// Box half extents, one per axis.
    #[arg(long, value_delimiter = ',')]
    pub half_extents: Vec<f64>,
    #[arg(long, default_value_t = 0.1)]
    pub eps: f64,
    #[arg(long, default_value_t = 0.1)]
    pub delta: f64,
    /// Number of translates for the (k, G) tester.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Round constant for the (k, G) tester.
    #[arg(long, default_value_t = meb_kit_core::tester::DEFAULT_ROUND_CONSTANT)]
    pub c: f64,
    /// Independent repetitions, seeded from the master seed.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Jung,
    Variant,
    FractionalHelly,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundsArgs {
    #[arg(value_enum)]
    pub which: BoundKind,
    /// Fraction of intersecting (d+1)-tuples for the fractional Helly bound.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Dimension for the fractional Helly bound; defaults to the input dimension.
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConvexityOp {
    Radon,
    Caratheodory,
    HellyBoxes,
    Nodim,
}

#[derive(Debug, Args, Serialize)]
pub struct ConvexityArgs {
    #[arg(value_enum)]
    pub op: ConvexityOp,
    /// Subset size for the no-dimension construction.
    #[arg(long)]
    pub r: Option<usize>,
    /// Convex weights of the target point; uniform when omitted.
    #[arg(long, value_delimiter = ',')]
    pub weights: Vec<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct GenArgs {
    /// uniform-ball, sphere-surface, gaussian, clustered, clusterable or far.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Cluster count for `clustered`.
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 10.0)]
    pub separation: f64,
    /// Ball count for `clusterable`.
    #[arg(long, default_value_t = 1)]
    pub k1: usize,
    #[arg(long, default_value_t = 1.0)]
    pub eps: f64,
    /// Scattered point count for `far`.
    #[arg(long, default_value_t = 3)]
    pub k2: usize,
    #[arg(long, default_value_t = 10.0)]
    pub delta: f64,
    /// Write the generated points here (format from --format or the extension).
    #[arg(long)]
    pub points: Option<std::path::PathBuf>,
}

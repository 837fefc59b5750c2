//! Command-line surface. Every argument struct is serializable so that the
//! `# config:` line atop each output records exactly what produced it.
//! Output paths and thread counts are left out of that record: they do not
//! affect the result.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "sparse-sketch", version, about = "Max-hash embeddings of sparse non-negative vectors")]
pub struct Cli {
    /// Worker threads; outputs are identical for every value.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random sparse dataset in the tab format.
    Gen(GenArgs),
    /// Embed every vector; writes `id,v0,...` rows and a params JSON file.
    Embed(EmbedArgs),
    /// Compare true and embedded distances (all pairs, or norms with --vs-zero).
    Distort(DistortArgs),
    /// Applications, each checked against its brute-force value.
    #[command(subcommand)]
    Apps(AppsCommand),
    /// Lower-bound probes on explicit linear maps.
    #[command(subcommand)]
    Probe(ProbeCommand),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GenArgs {
    /// Output file (stdout if absent).
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of vectors.
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Non-zeros per vector.
    #[arg(long, default_value_t = 10)]
    pub s: usize,
    /// Ambient dimension.
    #[arg(long, default_value_t = 1000)]
    pub dim: u64,
    /// `nonneg` (values in (0, 1]) or `discrete` (values in ±{1..delta}).
    #[arg(long, default_value = "nonneg")]
    pub kind: String,
    #[arg(long, default_value_t = 1)]
    pub delta: u32,
}

/// How to obtain `(m, T)`: a params file, or a planning mode.
#[derive(Debug, Clone, Args, Serialize)]
pub struct PlanArgs {
    /// Params JSON from an earlier `embed`; overrides the planning flags and --seed.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// all-p | linf-exact | sum-linf | sum-lp | discrete | custom
    #[arg(long, default_value = "all-p")]
    pub mode: String,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Entry bound for discrete mode.
    #[arg(long)]
    pub delta: Option<u32>,
    /// Sparsity (default: largest support in the input).
    #[arg(long)]
    pub s: Option<usize>,
    /// Dataset size used for planning (default: input size).
    #[arg(long)]
    pub n: Option<usize>,
    /// Buckets per copy, custom mode.
    #[arg(long)]
    pub m: Option<u64>,
    /// Copies, custom mode.
    #[arg(long)]
    pub copies: Option<u64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EmbedArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Embedding CSV (stdout if absent).
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    /// Params JSON (default: next to --output as `<stem>.params.json`).
    #[arg(long)]
    #[serde(skip)]
    pub params_out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Ambient dimension, overriding the file.
    #[arg(long)]
    pub dim: Option<u64>,
    /// Exponent for sum-lp and discrete planning.
    #[arg(long)]
    pub p: Option<f64>,
    #[command(flatten)]
    pub plan: PlanArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DistortArgs {
    /// Dataset (required unless --figure1).
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<u64>,
    /// Norm exponent, or `inf` (default: 2, or inf with --figure1).
    #[arg(long)]
    pub p: Option<String>,
    /// Compare each vector's norm instead of pairwise distances.
    #[arg(long)]
    pub vs_zero: bool,
    /// Max-hash (m = 50, T = 1) against the sum-hash baseline on 10-sparse
    /// vectors in dimension 1000, per-vector norms.
    #[arg(long)]
    pub figure1: bool,
    /// Vectors generated for --figure1.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[command(flatten)]
    pub plan: PlanArgs,
}

#[derive(Debug, Subcommand)]
pub enum AppsCommand {
    /// Exact diameter against the sketched one (l_inf stream, l_1 sign
    /// patterns, or a projected scan for other p).
    Diameter(DiameterArgs),
    /// Exact max-cut against max-cut after one max-hash map.
    Maxcut(MaxcutArgs),
    /// Basic clustering cost of random clusterings, original against embedded.
    ClusterCost(ClusterArgs),
    /// Distance-sum estimator against direct summation, one row per query.
    DistEst(DistEstArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DiameterArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<u64>,
    #[arg(long, default_value = "inf")]
    pub p: String,
    /// Independent hash seeds, one row each.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Sparsity (default: largest support).
    #[arg(long)]
    pub s: Option<usize>,
    /// Projected dimension for p = 1 (at most 24).
    #[arg(long, default_value_t = 20)]
    pub k: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MaxcutArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<u64>,
    #[arg(long, default_value = "2")]
    pub p: String,
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ClusterArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<u64>,
    /// median | means | center
    #[arg(long, default_value = "median")]
    pub objective: String,
    /// Norm exponent or `inf` (default: 1 for median, 2 for means, inf for center).
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 0.2)]
    pub eps: f64,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DistEstArgs {
    /// Indexed dataset (not needed with --estimator).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Query vectors; the true value needs --input.
    #[arg(long)]
    pub queries: PathBuf,
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub dim: Option<u64>,
    /// Even exponent.
    #[arg(long, default_value_t = 2)]
    pub p: u32,
    #[arg(long, default_value_t = 0.25)]
    pub eps: f64,
    /// Load a saved estimator instead of building one.
    #[arg(long)]
    pub estimator: Option<PathBuf>,
    /// Save the built estimator as JSON.
    #[arg(long)]
    #[serde(skip)]
    pub estimator_out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ProbeCommand {
    /// Exact-preservation rate of a linear map on Unif draws; rows `trial,stat,pass`.
    Rate(RateArgs),
    /// Witness x with ||x||_inf = 1 and ||Ax||_inf >= 5.
    Violation(ViolationArgs),
    /// Empirical statistics of the Unif sampler.
    UnifStats(UnifArgs),
}

/// A dense map from a file, or generated.
#[derive(Debug, Clone, Args, Serialize)]
pub struct MapArgs {
    /// Dense map CSV (`rows,cols` line, then rows).
    #[arg(long)]
    pub map: Option<PathBuf>,
    /// identity | zero | birthday | gaussian | random-sign | ones-row
    #[arg(long, default_value = "identity")]
    pub map_kind: String,
    /// Rows of a generated map.
    #[arg(long, default_value_t = 100)]
    pub rows: usize,
    /// Columns (ambient dimension) of a generated map.
    #[arg(long, default_value_t = 100)]
    pub d: usize,
    /// Save the map used.
    #[arg(long)]
    #[serde(skip)]
    pub map_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RateArgs {
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub map: MapArgs,
    /// Support size of each draw.
    #[arg(long, default_value_t = 10)]
    pub t: usize,
    /// Variance of each non-zero.
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Relative tolerance; 0 means exact up to 1e-9.
    #[arg(long, default_value_t = 0.0)]
    pub gamma: f64,
    #[arg(long, default_value = "2")]
    pub p: String,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ViolationArgs {
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub map: MapArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct UnifArgs {
    #[arg(long)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub t: usize,
    #[arg(long, default_value_t = 1.0)]
    pub r: f64,
    #[arg(long, default_value_t = 100)]
    pub d: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
}

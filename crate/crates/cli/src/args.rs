use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ltd_core::experiments::{Algorithm, SignalKind};

/// Low-dimension tridiagonal denoising: generate data, denoise signals,
/// run benchmark suites and build performance profiles.
#[derive(Debug, Parser)]
#[command(name = "ltd", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an exact signal and a noisy copy of it.
    Gen(GenArgs),
    /// Denoise a signal file.
    Denoise(DenoiseArgs),
    /// Run a seeded benchmark suite and write a results document.
    Bench(BenchArgs),
    /// Turn a results document into Dolan-Moré time profiles.
    Profile(ProfileArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Exact signal family: uniform, gaussian or sine.
    #[arg(long, default_value = "sine")]
    pub kind: SignalKind,
    /// Number of samples.
    #[arg(long)]
    pub n: usize,
    /// Standard deviation of the added normal noise.
    #[arg(long, default_value_t = 0.1)]
    pub noise_std: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out_exact: PathBuf,
    #[arg(long)]
    pub out_noisy: PathBuf,
}

#[derive(Debug, Args)]
pub struct DenoiseArgs {
    /// ltd, hybrid, ma or ssa.
    #[arg(long, default_value = "ltd")]
    pub algo: Algorithm,
    #[arg(short, long, visible_alias = "in")]
    pub input: PathBuf,
    #[arg(short, long, visible_alias = "out")]
    pub output: PathBuf,
    /// Seed for the randomised algorithms (required for ltd and hybrid).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Candidate models per pass (default: suggested value for the size).
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Error tolerance (default: suggested value for the size).
    #[arg(long)]
    pub delta: Option<f64>,
    /// Selection ratio in (0, 1].
    #[arg(long)]
    pub ratio: Option<f64>,
    /// Odd moving-average window.
    #[arg(long)]
    pub window: Option<usize>,
    #[arg(long)]
    pub max_outer: Option<usize>,
    /// Hybrid gate: smooth first when noise std exceeds this fraction of the range.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// SSA embedding dimension.
    #[arg(long)]
    pub embed_dim: Option<usize>,
    /// SSA rank.
    #[arg(long)]
    pub rank: Option<usize>,
    /// Exact signal; when given, mse1 and mse2 are reported.
    #[arg(long)]
    pub exact: Option<PathBuf>,
    /// Write the accepted error trace as pass,k,E CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated data sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Repeats per size.
    #[arg(long, default_value_t = 20)]
    pub trials: usize,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "ltd,ssa")]
    pub algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 0.1)]
    pub noise_std: f64,
    #[arg(long, default_value = "sine")]
    pub kind: SignalKind,
    #[arg(long)]
    pub seed: u64,
    #[arg(short, long, visible_alias = "out")]
    pub output: PathBuf,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(short, long, visible_alias = "in")]
    pub input: PathBuf,
    #[arg(short, long, visible_alias = "out")]
    pub output: PathBuf,
}

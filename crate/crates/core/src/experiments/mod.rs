//! Seeded benchmark protocol: random test signals, paired trials over a set
//! of denoisers, aggregation over repeats, and performance profiles.

mod aggregate;
mod profile;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, StandardNormal};
use serde::{Deserialize, Serialize};

pub use aggregate::{aggregate, AggregateRow};
pub use profile::{dolan_more_profile, ProfileCurve};

use crate::baselines::{moving_average, ssa_denoise, SsaParams};
use crate::ltd::{default_params, denoise, hybrid_denoise, DEFAULT_HIGH_NOISE_THRESHOLD};
use crate::{Error, Real, Result};

/// Family of exact test signals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignalKind {
    /// i.i.d. `U[0, 1]`.
    Uniform,
    /// i.i.d. standard normal.
    Gaussian,
    /// `sin(2π·3·i/n)`.
    Sine,
}

impl FromStr for SignalKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Self::Uniform),
            "gaussian" => Ok(Self::Gaussian),
            "sine" => Ok(Self::Sine),
            other => Err(Error::BadKind(other.to_string())),
        }
    }
}

impl fmt::Display for SignalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Uniform => "uniform",
            Self::Gaussian => "gaussian",
            Self::Sine => "sine",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "ltd")]
    Ltd,
    #[serde(rename = "hybrid")]
    Hybrid,
    #[serde(rename = "ma")]
    MovingAverage,
    #[serde(rename = "ssa")]
    Ssa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Self::Ltd, Self::Hybrid, Self::MovingAverage, Self::Ssa];

    pub fn name(self) -> &'static str {
        match self {
            Self::Ltd => "ltd",
            Self::Hybrid => "hybrid",
            Self::MovingAverage => "ma",
            Self::Ssa => "ssa",
        }
    }

    /// Whether the algorithm consumes random draws.
    pub fn is_randomized(self) -> bool {
        matches!(self, Self::Ltd | Self::Hybrid)
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::BadAlgorithm(s.to_string()))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Settings shared by every algorithm in a suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmSettings {
    pub ma_window: usize,
    pub hybrid_threshold: f64,
    /// SSA parameters; `None` picks [`SsaParams::for_length`] per size.
    pub ssa: Option<SsaParams>,
}

impl Default for AlgorithmSettings {
    fn default() -> Self {
        Self {
            ma_window: 3,
            hybrid_threshold: DEFAULT_HIGH_NOISE_THRESHOLD,
            ssa: None,
        }
    }
}

impl AlgorithmSettings {
    /// Runs `algorithm` on `noisy`. LTD variants use the suggested
    /// parameters for `noisy.len()` with the given seed.
    pub fn run(&self, algorithm: Algorithm, noisy: &[f64], seed: u64) -> Result<Vec<f64>> {
        let n = noisy.len();
        match algorithm {
            Algorithm::Ltd => Ok(denoise(noisy, &default_params(n).with_seed(seed))?.denoised),
            Algorithm::Hybrid => {
                let params = default_params(n).with_seed(seed);
                Ok(hybrid_denoise(noisy, &params, self.hybrid_threshold)?.denoised)
            }
            Algorithm::MovingAverage => moving_average(noisy, self.ma_window),
            Algorithm::Ssa => {
                let params = self.ssa.unwrap_or_else(|| SsaParams::for_length(n));
                ssa_denoise(noisy, &params)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub sizes: Vec<usize>,
    pub trials_per_size: usize,
    pub algorithms: Vec<Algorithm>,
    pub noise_std: f64,
    pub base_seed: u64,
    pub kind: SignalKind,
    pub settings: AlgorithmSettings,
}

impl SuiteConfig {
    pub const DEFAULT_NOISE_STD: f64 = 0.1;

    pub fn new(sizes: Vec<usize>, trials_per_size: usize, algorithms: Vec<Algorithm>) -> Self {
        Self {
            sizes,
            trials_per_size,
            algorithms,
            noise_std: Self::DEFAULT_NOISE_STD,
            base_seed: 0,
            kind: SignalKind::Sine,
            settings: AlgorithmSettings::default(),
        }
    }
}

/// Outcome of one algorithm on one `(size, trial)` problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub algorithm: String,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub elapsed_seconds: f64,
    pub mse1: f64,
    /// `None` when the algorithm failed.
    pub mse2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl TrialRecord {
    pub fn failed(&self) -> bool {
        self.failure.is_some() || self.mse2.is_none()
    }
}

/// SplitMix64 finaliser.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of problem `(size, trial)`: `mix(mix(mix(base) ^ size) ^ trial)`.
/// Depends only on its own coordinates, so adding sizes or trials never
/// changes existing problems.
pub fn derive_seed(base_seed: u64, size: usize, trial: usize) -> u64 {
    mix64(mix64(mix64(base_seed) ^ size as u64) ^ trial as u64)
}

pub fn generate_exact(kind: SignalKind, n: usize, seed: u64) -> Result<Vec<f64>> {
    if n < 3 {
        return Err(Error::TooShort { needed: 3, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match kind {
        SignalKind::Uniform => (0..n).map(|_| rng.random::<f64>()).collect(),
        SignalKind::Gaussian => (0..n).map(|_| StandardNormal.sample(&mut rng)).collect(),
        SignalKind::Sine => (0..n)
            .map(|i| (2.0 * std::f64::consts::PI * 3.0 * i as f64 / n as f64).sin())
            .collect(),
    })
}

/// Adds i.i.d. `N(0, std²)` noise.
pub fn add_noise(signal: &[f64], std: f64, seed: u64) -> Result<Vec<f64>> {
    if !(std >= 0.0 && std.is_finite()) {
        return Err(Error::BadParams(format!(
            "noise std {std} must be finite and >= 0"
        )));
    }
    let normal =
        Normal::new(0.0, std).map_err(|e| Error::BadParams(format!("noise std {std}: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(signal
        .iter()
        .map(|&x| x + normal.sample(&mut rng))
        .collect())
}

pub fn mse<T: Real>(a: &[T], b: &[T]) -> Result<T> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::Empty);
    }
    let sum: T = a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum();
    Ok(sum / T::of(a.len() as f64))
}

/// The exact/noisy pair of problem `(size, trial)`.
pub fn problem_signals(
    config: &SuiteConfig,
    size: usize,
    trial: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let seed = derive_seed(config.base_seed, size, trial);
    let exact = generate_exact(config.kind, size, mix64(seed ^ 1))?;
    let noisy = add_noise(&exact, config.noise_std, mix64(seed ^ 2))?;
    Ok((exact, noisy))
}

/// Runs every algorithm on every `(size, trial)` problem. All algorithms of a
/// problem see the same noisy input. Records are ordered by size, trial and
/// algorithm as listed in `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<TrialRecord>> {
    if config.trials_per_size < 1 {
        return Err(Error::BadParams(
            "trials_per_size must be at least 1".into(),
        ));
    }
    if config.algorithms.is_empty() || config.sizes.is_empty() {
        return Err(Error::BadParams(
            "suite needs at least one size and algorithm".into(),
        ));
    }
    let mut records =
        Vec::with_capacity(config.sizes.len() * config.trials_per_size * config.algorithms.len());
    for &size in &config.sizes {
        for trial in 0..config.trials_per_size {
            let seed = derive_seed(config.base_seed, size, trial);
            let (exact, noisy) = problem_signals(config, size, trial)?;
            let mse1 = mse(&exact, &noisy)?;
            for &algorithm in &config.algorithms {
                let started = Instant::now();
                let outcome = config.settings.run(algorithm, &noisy, seed);
                let elapsed_seconds = started.elapsed().as_secs_f64();
                let (mse2, failure) = match outcome.and_then(|d| mse(&exact, &d)) {
                    Ok(m) => (Some(m), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                records.push(TrialRecord {
                    algorithm: algorithm.name().to_string(),
                    n: size,
                    trial,
                    seed,
                    elapsed_seconds,
                    mse1,
                    mse2,
                    failure,
                });
            }
        }
    }
    Ok(records)
}

//! Low-dimension tridiagonal (LTD) denoising for real-valued signals.
//!
//! The crate is organised bottom-up:
//!
//! - [`tridiagonal`]: tridiagonal systems and the O(n) Thomas solve.
//! - [`detection`]: second differences and the ratio rule that flags noisy samples.
//! - [`ltd`]: the iterative denoiser with its learn/feedback acceptance loop.
//! - [`baselines`]: moving average and singular spectrum analysis for comparison.
//! - [`experiments`]: seeded test generation, trial runs, aggregation and
//!   Dolan-Moré performance profiles.
//!
//! All numerical code is generic over [`Real`] (implemented for `f32` and
//! `f64`). The aliases below fix the scalar to `f64` for the common case.

pub mod baselines;
pub mod detection;
mod error;
pub mod experiments;
pub mod ltd;
mod scalar;
pub mod tridiagonal;

pub use error::{Error, Result};
pub use scalar::Real;

pub use baselines::{moving_average, ssa_denoise, SsaParams};
pub use detection::{second_differences, select_noisy_indices, DetectionResult};
pub use ltd::{
    build_tridiagonal_model, default_params, denoise, finalize, hybrid_denoise, initialize,
    pdf_grid, DenoiseResult, LtdParams, NoiseDistribution, TraceEntry,
};
pub use tridiagonal::TridiagonalSystem;

/// A finite sequence of samples.
pub type Signal<T = f64> = Vec<T>;

pub type TridiagonalSystem64 = TridiagonalSystem<f64>;
pub type TridiagonalSystem32 = TridiagonalSystem<f32>;
pub type DetectionResult64 = DetectionResult<f64>;
pub type DetectionResult32 = DetectionResult<f32>;
pub type NoiseDistribution64 = NoiseDistribution<f64>;
pub type NoiseDistribution32 = NoiseDistribution<f32>;
pub type DenoiseResult64 = DenoiseResult<f64>;
pub type DenoiseResult32 = DenoiseResult<f32>;

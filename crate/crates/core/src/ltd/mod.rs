//! The low-dimension tridiagonal (LTD) denoiser.
//!
//! Each outer pass flags the samples with the largest curvature, then tries
//! up to `kmax` random tridiagonal models of the noise around them. A
//! candidate `f` is kept only when its error `E = ‖f - gt‖₂` beats every
//! earlier candidate of the same pass. The best candidate overwrites the
//! flagged samples and the next pass re-detects on the updated signal.

mod model;
mod params;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use model::{build_tridiagonal_model, initialize, pdf_grid, NoiseDistribution};
pub use params::{default_params, LtdParams, DEFAULT_MAX_OUTER, DEFAULT_WINDOW, SUGGESTED_PARAMS};

use crate::baselines::moving_average;
use crate::detection::select_noisy_indices;
use crate::experiments::mse;
use crate::{Error, Real, Result};

/// Default gate for [`hybrid_denoise`]: smooth first when the fitted noise
/// std exceeds this fraction of the signal's range.
pub const DEFAULT_HIGH_NOISE_THRESHOLD: f64 = 0.08;

/// One candidate model evaluated by the inner loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceEntry<T> {
    /// Outer pass, starting at 0.
    pub pass: usize,
    /// Inner iteration within the pass, starting at 0.
    pub k: usize,
    /// `‖f - gt‖₂` of this candidate.
    pub error: T,
    /// Whether the feedback rule kept this candidate.
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenoiseResult<T> {
    pub denoised: Vec<T>,
    /// Inner iterations over all passes.
    pub iterations_total: usize,
    /// Outer passes that wrote a candidate back.
    pub passes: usize,
    pub error_trace: Vec<TraceEntry<T>>,
    /// Error of the last accepted candidate, if any.
    pub final_error: Option<T>,
    pub elapsed_seconds: f64,
    /// Set by [`hybrid_denoise`] when the moving-average branch ran.
    pub smoothed: bool,
}

impl<T: Real> DenoiseResult<T> {
    fn unchanged(signal: &[T], started: Instant) -> Self {
        Self {
            denoised: signal.to_vec(),
            iterations_total: 0,
            passes: 0,
            error_trace: Vec::new(),
            final_error: None,
            elapsed_seconds: started.elapsed().as_secs_f64(),
            smoothed: false,
        }
    }

    /// Accepted candidates only, in order.
    pub fn accepted(&self) -> impl Iterator<Item = &TraceEntry<T>> {
        self.error_trace.iter().filter(|e| e.accepted)
    }
}

/// Working state of one denoising run.
struct LtdState<T> {
    working: Vec<T>,
    iterations: usize,
    passes: usize,
    error: Option<T>,
    trace: Vec<TraceEntry<T>>,
}

pub fn denoise<T: Real>(signal: &[T], params: &LtdParams) -> Result<DenoiseResult<T>> {
    let started = Instant::now();
    params.validate()?;
    if signal.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            got: signal.len(),
        });
    }
    let dist = initialize(signal, params.window)?;
    if !(dist.std > T::zero()) {
        return Ok(DenoiseResult::unchanged(signal, started));
    }

    let ratio = T::of(params.ratio);
    let delta = T::of(params.delta);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut state = LtdState {
        working: signal.to_vec(),
        iterations: 0,
        passes: 0,
        error: None,
        trace: Vec::new(),
    };

    for pass in 0..params.max_outer {
        let detection = select_noisy_indices(&state.working, ratio)?;
        if detection.is_empty() {
            break;
        }
        let (_, pdf) = pdf_grid(&dist, detection.indices.len())?;
        let two = T::of(2.0);
        let anchor: Vec<T> = detection
            .indices
            .iter()
            .map(|&i| (state.working[i - 1] + state.working[i + 1]) / two)
            .collect();

        let mut best: Option<(T, Vec<T>)> = None;
        for k in 0..params.kmax {
            state.iterations += 1;
            let system = build_tridiagonal_model(&anchor, &pdf, dist.std, &mut rng)?;
            let f = match system.solve() {
                Ok(f) => f,
                // Degenerate draw: the next iteration builds a fresh model.
                Err(Error::ZeroPivot { .. }) => continue,
                Err(e) => return Err(e),
            };
            let error = l2_distance(&f, &detection.gt);
            let accepted = best.as_ref().is_none_or(|(b, _)| error < *b);
            state.trace.push(TraceEntry {
                pass,
                k,
                error,
                accepted,
            });
            if accepted {
                best = Some((error, f));
            }
            if error <= delta {
                break;
            }
        }

        let Some((error, f)) = best else { break };
        for (&i, v) in detection.indices.iter().zip(f) {
            state.working[i] = v;
        }
        state.passes += 1;
        state.error = Some(error);
        if error <= delta {
            break;
        }
    }

    Ok(DenoiseResult {
        denoised: state.working,
        iterations_total: state.iterations,
        passes: state.passes,
        error_trace: state.trace,
        final_error: state.error,
        elapsed_seconds: started.elapsed().as_secs_f64(),
        smoothed: false,
    })
}

/// Runs [`denoise`], first smoothing with a moving average when the fitted
/// noise std exceeds `high_noise_threshold · (max - min)` of the input.
pub fn hybrid_denoise<T: Real>(
    signal: &[T],
    params: &LtdParams,
    high_noise_threshold: f64,
) -> Result<DenoiseResult<T>> {
    let started = Instant::now();
    params.validate()?;
    if !(high_noise_threshold >= 0.0) {
        return Err(Error::BadParams(format!(
            "high-noise threshold {high_noise_threshold} must be non-negative"
        )));
    }
    if signal.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            got: signal.len(),
        });
    }
    let dist = initialize(signal, params.window)?;
    let (lo, hi) = signal
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    let range = hi - lo + T::epsilon();

    if dist.std > T::of(high_noise_threshold) * range {
        let smoothed = moving_average(signal, params.window)?;
        let mut result = denoise(&smoothed, params)?;
        result.smoothed = true;
        result.elapsed_seconds = started.elapsed().as_secs_f64();
        Ok(result)
    } else {
        denoise(signal, params)
    }
}

/// `(mse1, mse2)`: error of the noisy input and of the denoised output
/// against the exact signal.
pub fn finalize<T: Real>(exact: &[T], noisy: &[T], denoised: &[T]) -> Result<(T, T)> {
    Ok((mse(exact, noisy)?, mse(exact, denoised)?))
}

fn l2_distance<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x - y) * (x - y))
        .sum::<T>()
        .sqrt()
}

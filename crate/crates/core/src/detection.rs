//! Flags the locally noisiest samples of a signal by their curvature.

use crate::{Error, Real, Result};

/// Default selection ratio: a sample is flagged when its second difference
/// exceeds 70% of the largest one.
pub const DEFAULT_RATIO: f64 = 0.7;

#[derive(Debug, Clone, PartialEq)]
pub struct DetectionResult<T> {
    /// Second differences; `dd[k]` belongs to signal position `k + 1`.
    pub dd: Vec<T>,
    /// `max |dd|`.
    pub max_abs: T,
    /// Selected interior signal positions, strictly increasing.
    pub indices: Vec<usize>,
    /// Signal values at `indices`.
    pub gt: Vec<T>,
}

impl<T> DetectionResult<T> {
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// `x[i+1] - 2·x[i] + x[i-1]` for every interior position.
pub fn second_differences<T: Real>(signal: &[T]) -> Result<Vec<T>> {
    if signal.len() < 3 {
        return Err(Error::TooShort {
            needed: 3,
            got: signal.len(),
        });
    }
    let two = T::of(2.0);
    Ok(signal
        .windows(3)
        .map(|w| w[2] - two * w[1] + w[0])
        .collect())
}

/// Selects interior positions whose `|dd| - ratio·max|dd| > 0`.
///
/// The inequality is strict: samples sitting exactly on the threshold are
/// left alone, and a signal with no curvature selects nothing.
pub fn select_noisy_indices<T: Real>(signal: &[T], ratio: T) -> Result<DetectionResult<T>> {
    if !(ratio > T::zero() && ratio <= T::one()) {
        return Err(Error::BadParams(format!(
            "selection ratio {ratio} not in (0, 1]"
        )));
    }
    let dd = second_differences(signal)?;
    let max_abs = dd.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let threshold = ratio * max_abs;
    let indices: Vec<usize> = dd
        .iter()
        .enumerate()
        .filter(|(_, v)| v.abs() - threshold > T::zero())
        .map(|(k, _)| k + 1)
        .collect();
    let gt = indices.iter().map(|&i| signal[i]).collect();
    Ok(DetectionResult {
        dd,
        max_abs,
        indices,
        gt,
    })
}

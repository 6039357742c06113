//! Comparison denoisers: centred moving average and singular spectrum analysis.

mod eigen;
mod ssa;

pub use ssa::{ssa_denoise, SsaParams};

use crate::{Error, Real, Result};

/// Centred moving average. Near the ends the window is clipped to the
/// available samples, so the output has the input's length.
pub fn moving_average<T: Real>(signal: &[T], window: usize) -> Result<Vec<T>> {
    let n = signal.len();
    if window < 3 || window.is_multiple_of(2) || window > n {
        return Err(Error::BadWindow { window, len: n });
    }
    let half = window / 2;

    // Prefix sums keep this O(n) for any window.
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(T::zero());
    for &x in signal {
        let last = *prefix.last().unwrap();
        prefix.push(last + x);
    }
    Ok((0..n)
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half + 1).min(n);
            (prefix[hi] - prefix[lo]) / T::of((hi - lo) as f64)
        })
        .collect())
}

//! One-dimensional singular spectrum analysis.
//!
//! The series is embedded into an `L×K` Hankel trajectory matrix
//! (`K = n - L + 1`), projected onto its leading `r` left singular vectors,
//! and folded back into a series by averaging each anti-diagonal. The left
//! singular vectors come from the eigenvectors of the `L×L` lag-covariance
//! matrix `X·Xᵀ`, which is small because `L ≤ n/2`.

use serde::{Deserialize, Serialize};

use super::eigen::symmetric_eigen;
use crate::{Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsaParams {
    /// Window (embedding dimension) `L`.
    pub embed_dim: usize,
    /// Number of singular triples kept.
    pub rank: usize,
}

impl SsaParams {
    pub const MAX_EMBED_DIM: usize = 50;
    pub const DEFAULT_RANK: usize = 2;

    /// Benchmark defaults: `L = min(n/4, 50)` (at least 2), `r = 2`.
    pub fn for_length(n: usize) -> Self {
        Self {
            embed_dim: (n / 4).clamp(2, Self::MAX_EMBED_DIM),
            rank: Self::DEFAULT_RANK,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let l = self.embed_dim;
        if l < 2 || 2 * l > n {
            return Err(Error::BadParams(format!(
                "embedding dimension {l} must satisfy 2 <= L <= n/2 (n = {n})"
            )));
        }
        if self.rank < 1 || self.rank > l {
            return Err(Error::BadParams(format!(
                "rank {} must satisfy 1 <= r <= L = {l}",
                self.rank
            )));
        }
        Ok(())
    }
}

pub fn ssa_denoise<T: Real>(signal: &[T], params: &SsaParams) -> Result<Vec<T>> {
    let n = signal.len();
    params.validate(n)?;
    let l = params.embed_dim;
    let k = n - l + 1;
    let r = params.rank;

    // Lag covariance S = X·Xᵀ with X[i][j] = signal[i + j].
    let mut cov = vec![T::zero(); l * l];
    for i in 0..l {
        for j in i..l {
            let s: T = (0..k).map(|c| signal[i + c] * signal[j + c]).sum();
            cov[i * l + j] = s;
            cov[j * l + i] = s;
        }
    }
    let (_, u) = symmetric_eigen(cov, l);

    // Projections P = U_rᵀ·X, one row per kept component.
    let proj: Vec<Vec<T>> = (0..r)
        .map(|comp| {
            (0..k)
                .map(|c| (0..l).map(|i| u[i * l + comp] * signal[i + c]).sum())
                .collect()
        })
        .collect();

    let mut sums = vec![T::zero(); n];
    let mut counts = vec![0usize; n];
    for i in 0..l {
        for c in 0..k {
            let x: T = (0..r).map(|comp| u[i * l + comp] * proj[comp][c]).sum();
            sums[i + c] = sums[i + c] + x;
            counts[i + c] += 1;
        }
    }
    Ok(sums
        .into_iter()
        .zip(counts)
        .map(|(s, c)| s / T::of(c as f64))
        .collect())
}

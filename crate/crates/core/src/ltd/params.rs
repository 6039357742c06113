use serde::{Deserialize, Serialize};

use crate::detection::DEFAULT_RATIO;
use crate::{Error, Result};

/// Suggested `(n, kmax, delta)` per data size.
pub const SUGGESTED_PARAMS: [(usize, usize, f64); 5] = [
    (100, 10, 1e-6),
    (500, 10, 1e-5),
    (1000, 100, 1e-4),
    (5000, 100, 1e-4),
    (10000, 200, 1e-3),
];

pub const DEFAULT_WINDOW: usize = 3;
pub const DEFAULT_MAX_OUTER: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LtdParams {
    /// Maximum number of candidate models tried per outer pass.
    pub kmax: usize,
    /// Tolerance on `E = ‖f - gt‖₂`.
    pub delta: f64,
    /// Selection ratio in `(0, 1]`.
    pub ratio: f64,
    /// Odd moving-average window used to fit the noise distribution.
    pub window: usize,
    /// Cap on outer passes.
    pub max_outer: usize,
    pub seed: u64,
}

impl Default for LtdParams {
    fn default() -> Self {
        default_params(SUGGESTED_PARAMS[0].0)
    }
}

impl LtdParams {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.kmax < 1 {
            return Err(Error::BadParams("kmax must be at least 1".into()));
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(Error::BadParams(format!(
                "delta {} must be positive",
                self.delta
            )));
        }
        if !(self.ratio > 0.0 && self.ratio <= 1.0) {
            return Err(Error::BadParams(format!(
                "ratio {} not in (0, 1]",
                self.ratio
            )));
        }
        if self.window < 3 || self.window.is_multiple_of(2) {
            return Err(Error::BadParams(format!(
                "window {} must be odd and at least 3",
                self.window
            )));
        }
        if self.max_outer < 1 {
            return Err(Error::BadParams("max_outer must be at least 1".into()));
        }
        Ok(())
    }
}

/// Parameters from the suggested-parameter row nearest to `n`; an exact tie
/// between two rows resolves to the smaller size.
pub fn default_params(n: usize) -> LtdParams {
    let (_, kmax, delta) = SUGGESTED_PARAMS
        .iter()
        .copied()
        .min_by_key(|&(size, _, _)| (size.abs_diff(n), size))
        .unwrap();
    LtdParams {
        kmax,
        delta,
        ratio: DEFAULT_RATIO,
        window: DEFAULT_WINDOW,
        max_outer: DEFAULT_MAX_OUTER,
        seed: 0,
    }
}

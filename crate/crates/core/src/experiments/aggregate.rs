use serde::{Deserialize, Serialize};

use super::TrialRecord;
use crate::{Error, Result};

/// Means over the repeats of one `(algorithm, n)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub algorithm: String,
    pub n: usize,
    pub trials: usize,
    pub failures: usize,
    /// Mean over successful trials; `None` when every trial failed.
    pub mean_time: Option<f64>,
    pub mean_mse1: f64,
    pub mean_mse2: Option<f64>,
}

/// Groups records by `(algorithm, n)` in order of first appearance. Failed
/// trials are excluded from the time and `mse2` means and counted in
/// `failures`.
pub fn aggregate(records: &[TrialRecord]) -> Result<Vec<AggregateRow>> {
    if records.is_empty() {
        return Err(Error::Empty);
    }
    let mut keys: Vec<(&str, usize)> = Vec::new();
    for r in records {
        let key = (r.algorithm.as_str(), r.n);
        if !keys.contains(&key) {
            keys.push(key);
        }
    }

    Ok(keys
        .into_iter()
        .map(|(algorithm, n)| {
            let group: Vec<&TrialRecord> = records
                .iter()
                .filter(|r| r.algorithm == algorithm && r.n == n)
                .collect();
            let ok: Vec<&&TrialRecord> = group.iter().filter(|r| !r.failed()).collect();
            let mean = |values: &mut dyn Iterator<Item = f64>, count: usize| {
                (count > 0).then(|| values.sum::<f64>() / count as f64)
            };
            AggregateRow {
                algorithm: algorithm.to_string(),
                n,
                trials: group.len(),
                failures: group.len() - ok.len(),
                mean_time: mean(&mut ok.iter().map(|r| r.elapsed_seconds), ok.len()),
                mean_mse1: group.iter().map(|r| r.mse1).sum::<f64>() / group.len() as f64,
                mean_mse2: mean(&mut ok.iter().filter_map(|r| r.mse2), ok.len()),
            }
        })
        .collect())
}

//! Dolan-Moré performance profiles over wall-clock time.
//!
//! For problem `p` with best time `t_p*`, algorithm `a` has ratio
//! `r_pa = t_pa / t_p*` (failures count as `+inf`), and
//! `rho_a(tau) = |{p : r_pa <= tau}| / #problems`.

use serde::{Deserialize, Serialize};

use super::TrialRecord;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileCurve {
    pub algorithm: String,
    /// `(tau, rho)` at every breakpoint, tau ascending.
    pub points: Vec<(f64, f64)>,
}

impl ProfileCurve {
    /// `rho(tau)` of the step function.
    pub fn rho_at(&self, tau: f64) -> f64 {
        self.points
            .iter()
            .take_while(|(t, _)| *t <= tau)
            .last()
            .map_or(0.0, |&(_, r)| r)
    }
}

fn ratio(time: f64, best: f64) -> f64 {
    if !time.is_finite() {
        f64::INFINITY
    } else if time == best {
        1.0
    } else {
        time / best
    }
}

/// Builds one curve per algorithm (in order of first appearance). Every
/// curve is evaluated at the union of all finite ratios, so all curves share
/// the same tau grid.
pub fn dolan_more_profile(records: &[TrialRecord]) -> Result<Vec<ProfileCurve>> {
    if records.is_empty() {
        return Err(Error::IncompleteMatrix("no records".into()));
    }
    let mut algorithms: Vec<&str> = Vec::new();
    let mut problems: Vec<(usize, usize)> = Vec::new();
    for r in records {
        if !algorithms.contains(&r.algorithm.as_str()) {
            algorithms.push(&r.algorithm);
        }
        if !problems.contains(&(r.n, r.trial)) {
            problems.push((r.n, r.trial));
        }
    }

    // times[p][a]
    let mut times = vec![vec![None::<f64>; algorithms.len()]; problems.len()];
    for r in records {
        let p = problems.iter().position(|&k| k == (r.n, r.trial)).unwrap();
        let a = algorithms.iter().position(|&k| k == r.algorithm).unwrap();
        if times[p][a].is_some() {
            return Err(Error::IncompleteMatrix(format!(
                "duplicate record for {} on (n={}, trial={})",
                r.algorithm, r.n, r.trial
            )));
        }
        let t = if r.failed() {
            f64::INFINITY
        } else {
            r.elapsed_seconds
        };
        times[p][a] = Some(t);
    }

    let mut ratios = vec![vec![0.0; algorithms.len()]; problems.len()];
    for (p, row) in times.iter().enumerate() {
        let mut best = f64::INFINITY;
        for (a, t) in row.iter().enumerate() {
            let t = t.ok_or_else(|| {
                Error::IncompleteMatrix(format!(
                    "{} has no record for (n={}, trial={})",
                    algorithms[a], problems[p].0, problems[p].1
                ))
            })?;
            best = best.min(t);
        }
        if !best.is_finite() {
            return Err(Error::IncompleteMatrix(format!(
                "every algorithm failed on (n={}, trial={})",
                problems[p].0, problems[p].1
            )));
        }
        for (a, t) in row.iter().enumerate() {
            ratios[p][a] = ratio(t.unwrap(), best);
        }
    }

    let mut taus: Vec<f64> = ratios
        .iter()
        .flatten()
        .copied()
        .filter(|r| r.is_finite())
        .collect();
    taus.sort_by(f64::total_cmp);
    taus.dedup();

    let total = problems.len() as f64;
    Ok(algorithms
        .iter()
        .enumerate()
        .map(|(a, name)| {
            let mut mine: Vec<f64> = ratios.iter().map(|row| row[a]).collect();
            mine.sort_by(f64::total_cmp);
            let mut solved = 0;
            let points = taus
                .iter()
                .map(|&tau| {
                    while solved < mine.len() && mine[solved] <= tau {
                        solved += 1;
                    }
                    (tau, solved as f64 / total)
                })
                .collect();
            ProfileCurve {
                algorithm: name.to_string(),
                points,
            }
        })
        .collect())
}

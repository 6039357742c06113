//! Independent reference computations for the acceptance criteria.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random strictly dominant tridiagonal system `(d, mu, rho, rhs)`.
pub fn random_dominant(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = n.saturating_sub(1);
    let mu: Vec<f64> = (0..m).map(|_| rng.random_range(-2.0..2.0)).collect();
    let rho: Vec<f64> = (0..m).map(|_| rng.random_range(-2.0..2.0)).collect();
    let d = (0..n)
        .map(|i| {
            let off =
                if i < m { mu[i].abs() } else { 0.0 } + if i > 0 { rho[i - 1].abs() } else { 0.0 };
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            sign * (off + rng.random_range(0.05..3.0))
        })
        .collect();
    let rhs = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
    (d, mu, rho, rhs)
}

/// Dense Gaussian elimination with partial pivoting on the expanded matrix.
pub fn dense_solve(d: &[f64], mu: &[f64], rho: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        a[i][i] = d[i];
        if i + 1 < n {
            a[i][i + 1] = mu[i];
            a[i + 1][i] = rho[i];
        }
    }
    let mut b = rhs.to_vec();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let m = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= m * a[col][k];
            }
            b[row] -= m * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x
}

/// Interior positions whose centred second difference strictly exceeds
/// `ratio` times the largest magnitude.
pub fn brute_select(x: &[f64], ratio: f64) -> Vec<usize> {
    let dd: Vec<f64> = (1..x.len() - 1)
        .map(|i| x[i + 1] - 2.0 * x[i] + x[i - 1])
        .collect();
    let m = dd.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    (1..x.len() - 1)
        .filter(|&i| dd[i - 1].abs() - ratio * m > 0.0)
        .collect()
}

pub fn mse(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>() / a.len() as f64
}

/// `rho_a(tau)` by scanning every problem, given `times[problem][algorithm]`
/// with failures as `+inf`.
pub fn brute_rho(times: &[Vec<f64>], a: usize, tau: f64) -> f64 {
    let mut hits = 0;
    for row in times {
        let best = row.iter().copied().fold(f64::INFINITY, f64::min);
        let r = if !row[a].is_finite() {
            f64::INFINITY
        } else if row[a] == best {
            1.0
        } else {
            row[a] / best
        };
        if r <= tau {
            hits += 1;
        }
    }
    hits as f64 / times.len() as f64
}

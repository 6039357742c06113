//! Independent reference implementations used as test oracles. None of these
//! call into the crate's numerical routines.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random strictly dominant tridiagonal system `(d, mu, rho, rhs)` with
/// entries of either sign.
pub fn random_dominant(n: usize, seed: u64) -> (Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mu: Vec<f64> = (0..n.saturating_sub(1))
        .map(|_| rng.random_range(-2.0..2.0))
        .collect();
    let rho: Vec<f64> = (0..n.saturating_sub(1))
        .map(|_| rng.random_range(-2.0..2.0))
        .collect();
    let d = (0..n)
        .map(|i| {
            let off = mu.get(i).map_or(0.0, |v: &f64| v.abs())
                + if i > 0 { rho[i - 1].abs() } else { 0.0 };
            let sign = if rng.random::<bool>() { 1.0 } else { -1.0 };
            sign * (off + rng.random_range(0.05..3.0))
        })
        .collect();
    let rhs = (0..n).map(|_| rng.random_range(-10.0..10.0)).collect();
    (d, mu, rho, rhs)
}

/// Dense `n×n` matrix (row-major) of a tridiagonal system.
pub fn dense(d: &[f64], mu: &[f64], rho: &[f64]) -> Vec<Vec<f64>> {
    let n = d.len();
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        a[i][i] = d[i];
        if i + 1 < n {
            a[i][i + 1] = mu[i];
            a[i + 1][i] = rho[i];
        }
    }
    a
}

pub fn dense_matvec(a: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum())
        .collect()
}

/// Gaussian elimination with partial pivoting.
pub fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
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

pub fn brute_second_differences(x: &[f64]) -> Vec<f64> {
    let mut out = Vec::new();
    for i in 1..x.len() - 1 {
        out.push(x[i + 1] - 2.0 * x[i] + x[i - 1]);
    }
    out
}

/// Interior positions `i` whose centred second difference strictly exceeds
/// `ratio` times the largest magnitude.
pub fn brute_select(x: &[f64], ratio: f64) -> Vec<usize> {
    let dd = brute_second_differences(x);
    let mut m = 0.0f64;
    for v in &dd {
        if v.abs() > m {
            m = v.abs();
        }
    }
    let mut out = Vec::new();
    for i in 1..x.len() - 1 {
        if dd[i - 1].abs() - ratio * m > 0.0 {
            out.push(i);
        }
    }
    out
}

/// Windowed mean clipped at the ends.
pub fn brute_moving_average(x: &[f64], window: usize) -> Vec<f64> {
    let h = window as isize / 2;
    let n = x.len() as isize;
    (0..n)
        .map(|i| {
            let mut s = 0.0;
            let mut c = 0.0;
            for j in i - h..=i + h {
                if j >= 0 && j < n {
                    s += x[j as usize];
                    c += 1.0;
                }
            }
            s / c
        })
        .collect()
}

/// Two-pass sample mean and standard deviation (`n - 1` denominator).
pub fn two_pass_mean_std(x: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mean = x.iter().sum::<f64>() / n;
    let var = x.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn normal_pdf(x: f64, mean: f64, std: f64) -> f64 {
    let z = (x - mean) / std;
    (-0.5 * z * z).exp() / (std * (2.0 * std::f64::consts::PI).sqrt())
}

pub fn brute_mse(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..a.len() {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    s / a.len() as f64
}

pub fn sine(n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (2.0 * std::f64::consts::PI * 3.0 * i as f64 / n as f64).sin())
        .collect()
}

pub fn gaussian_noise(n: usize, std: f64, seed: u64) -> Vec<f64> {
    use rand_distr::{Distribution, Normal};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, std).unwrap();
    (0..n).map(|_| normal.sample(&mut rng)).collect()
}

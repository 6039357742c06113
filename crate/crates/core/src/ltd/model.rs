//! Noise model: fitted residual distribution and the random tridiagonal
//! systems built from it.

use rand::Rng;

use crate::baselines::moving_average;
use crate::tridiagonal::TridiagonalSystem;
use crate::{Error, Real, Result};

/// Normal distribution fitted to the residuals `gm - x` between the moving
/// average and the signal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseDistribution<T> {
    pub mean: T,
    pub std: T,
}

impl<T: Real> NoiseDistribution<T> {
    pub fn pdf(&self, x: T) -> T {
        let z = (x - self.mean) / self.std;
        let norm = self.std * T::of((2.0 * std::f64::consts::PI).sqrt());
        (-(z * z) / T::of(2.0)).exp() / norm
    }
}

/// Fits the residual distribution of `signal` against its moving average.
/// The standard deviation uses the `n - 1` denominator.
pub fn initialize<T: Real>(signal: &[T], window: usize) -> Result<NoiseDistribution<T>> {
    let n = signal.len();
    if n < window || n < 2 {
        return Err(Error::TooShort {
            needed: window.max(2),
            got: n,
        });
    }
    let gm = moving_average(signal, window)?;
    let residuals: Vec<T> = gm.iter().zip(signal).map(|(&g, &x)| g - x).collect();
    let count = T::of(n as f64);
    let mean = residuals.iter().copied().sum::<T>() / count;
    let ss: T = residuals.iter().map(|&r| (r - mean) * (r - mean)).sum();
    let std = (ss / T::of((n - 1) as f64)).sqrt();
    Ok(NoiseDistribution { mean, std })
}

/// Evenly spaced grid over `mean ± 3·std` (just the mean when `n = 1`) and
/// the fitted density at each grid point.
pub fn pdf_grid<T: Real>(dist: &NoiseDistribution<T>, n: usize) -> Result<(Vec<T>, Vec<T>)> {
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if !(dist.std > T::zero()) {
        return Err(Error::DegenerateDistribution);
    }
    let grid: Vec<T> = if n == 1 {
        vec![dist.mean]
    } else {
        let lo = dist.mean - T::of(3.0) * dist.std;
        let step = T::of(6.0) * dist.std / T::of((n - 1) as f64);
        (0..n).map(|i| lo + step * T::of(i as f64)).collect()
    };
    let pdf = grid.iter().map(|&x| dist.pdf(x)).collect();
    Ok((grid, pdf))
}

/// Builds one random candidate model around `anchor`.
///
/// Off-diagonals are drawn from `U[-0.5, 0.5]` and each diagonal entry is
/// `1 + |mu_i| + |rho_{i-1}| + u_i` with `u_i ~ U[0, 0.5]`, so every model is
/// strictly diagonally dominant. The right-hand side is
/// `T·anchor + s ∘ (pdf / ‖pdf‖∞) · noise_scale` with random signs `s`, which
/// makes the solution the anchor plus a tridiagonally coupled noise term
/// shaped by the density values.
///
/// Draw order: `mu`, `rho`, `u`, then the signs. Identical rng state gives an
/// identical system.
pub fn build_tridiagonal_model<T: Real, R: Rng + ?Sized>(
    anchor: &[T],
    pdf: &[T],
    noise_scale: T,
    rng: &mut R,
) -> Result<TridiagonalSystem<T>> {
    let n = anchor.len();
    if n == 0 {
        return Err(Error::EmptySystem);
    }
    if pdf.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: pdf.len(),
        });
    }

    let mut centred = || T::of(rng.random::<f64>() - 0.5);
    let mu: Vec<T> = (0..n - 1).map(|_| centred()).collect();
    let rho: Vec<T> = (0..n - 1).map(|_| centred()).collect();
    let d: Vec<T> = (0..n)
        .map(|i| {
            let u = T::of(0.5 * rng.random::<f64>());
            let upper = mu.get(i).map_or(T::zero(), |v| v.abs());
            let lower = if i > 0 { rho[i - 1].abs() } else { T::zero() };
            T::one() + upper + lower + u
        })
        .collect();

    let peak = pdf.iter().fold(T::zero(), |m, v| m.max(v.abs()));
    let weight = if peak > T::zero() {
        noise_scale / peak
    } else {
        T::zero()
    };

    let mut system = TridiagonalSystem::new(d, mu, rho, vec![T::zero(); n])?;
    let mut rhs = system.multiply(anchor)?;
    for (r, &p) in rhs.iter_mut().zip(pdf) {
        let sign = if rng.random::<bool>() {
            T::one()
        } else {
            -T::one()
        };
        *r = *r + sign * p * weight;
    }
    system.set_rhs(rhs)?;
    Ok(system)
}

//! Tridiagonal linear systems `T·f = rhs`.
//!
//! Row `i` of `T` reads `rho[i-1]·f[i-1] + d[i]·f[i] + mu[i]·f[i+1]`, with the
//! out-of-range terms dropped on the first and last rows.

use crate::{Error, Real, Result};

/// Relative pivot guard: a pivot is rejected when its magnitude drops below
/// `PIVOT_GUARD · (1 + max|d_i|)`.
pub const PIVOT_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSystem<T> {
    d: Vec<T>,
    mu: Vec<T>,
    rho: Vec<T>,
    rhs: Vec<T>,
}

impl<T: Real> TridiagonalSystem<T> {
    /// Builds a system from its main diagonal `d`, super-diagonal `mu`,
    /// sub-diagonal `rho` and right-hand side.
    pub fn new(d: Vec<T>, mu: Vec<T>, rho: Vec<T>, rhs: Vec<T>) -> Result<Self> {
        let n = d.len();
        if n == 0 {
            return Err(Error::EmptySystem);
        }
        if rhs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rhs.len(),
            });
        }
        for off in [&mu, &rho] {
            if off.len() != n - 1 {
                return Err(Error::DimensionMismatch {
                    expected: n - 1,
                    got: off.len(),
                });
            }
        }
        Ok(Self { d, mu, rho, rhs })
    }

    /// Replaces the right-hand side, keeping the matrix.
    pub fn set_rhs(&mut self, rhs: Vec<T>) -> Result<()> {
        if rhs.len() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: rhs.len(),
            });
        }
        self.rhs = rhs;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn diagonal(&self) -> &[T] {
        &self.d
    }

    pub fn super_diagonal(&self) -> &[T] {
        &self.mu
    }

    pub fn sub_diagonal(&self) -> &[T] {
        &self.rho
    }

    pub fn rhs(&self) -> &[T] {
        &self.rhs
    }

    /// Off-diagonal magnitude of row `i`: `|mu_i| + |rho_{i-1}|`.
    fn off_diagonal_sum(&self, i: usize) -> T {
        let upper = self.mu.get(i).map_or(T::zero(), |v| v.abs());
        let lower = if i > 0 {
            self.rho[i - 1].abs()
        } else {
            T::zero()
        };
        upper + lower
    }

    pub fn is_strictly_diagonally_dominant(&self) -> bool {
        (0..self.len()).all(|i| self.d[i].abs() > self.off_diagonal_sum(i))
    }

    /// Computes `T·x`.
    pub fn multiply(&self, x: &[T]) -> Result<Vec<T>> {
        let n = self.len();
        if x.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        Ok((0..n)
            .map(|i| {
                let mut y = self.d[i] * x[i];
                if i > 0 {
                    y = y + self.rho[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y = y + self.mu[i] * x[i + 1];
                }
                y
            })
            .collect())
    }

    /// Solves `T·f = rhs` by forward elimination and back substitution
    /// without pivoting. O(n) time and space.
    pub fn solve(&self) -> Result<Vec<T>> {
        let n = self.len();
        let max_d = self.d.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        let guard = T::of(PIVOT_GUARD) * (T::one() + max_d);

        // Modified super-diagonal and right-hand side after elimination.
        let mut upper = vec![T::zero(); n];
        let mut y = vec![T::zero(); n];

        let mut pivot = self.d[0];
        if pivot.abs() < guard || !pivot.is_finite() {
            return Err(Error::ZeroPivot { row: 0 });
        }
        if n > 1 {
            upper[0] = self.mu[0] / pivot;
        }
        y[0] = self.rhs[0] / pivot;

        for i in 1..n {
            pivot = self.d[i] - self.rho[i - 1] * upper[i - 1];
            if pivot.abs() < guard || !pivot.is_finite() {
                return Err(Error::ZeroPivot { row: i });
            }
            if i + 1 < n {
                upper[i] = self.mu[i] / pivot;
            }
            y[i] = (self.rhs[i] - self.rho[i - 1] * y[i - 1]) / pivot;
        }

        for i in (0..n - 1).rev() {
            y[i] = y[i] - upper[i] * y[i + 1];
        }
        Ok(y)
    }
}

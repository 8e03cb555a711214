//! Quaternion fields on uniform grids with the quadrature-level operations
//! shared by the transform engines.

use crate::sum::pairwise_sum_by;
use crate::{GridSpec, Quaternion};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FieldError {
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("shift ({0}, {1}) is not an integer number of grid steps")]
    NonGridShift(f64, f64),
    #[error("grid is not symmetric about the origin")]
    AsymmetricGrid,
}

/// Sampled quaternion field; samples are row-major over (k1, k2).
#[derive(Clone, Debug, PartialEq)]
pub struct QField {
    pub grid: GridSpec,
    pub samples: Vec<Quaternion>,
}

impl QField {
    pub fn zero(grid: GridSpec) -> QField {
        QField { grid, samples: vec![Quaternion::ZERO; grid.len()] }
    }

    pub fn from_fn(grid: GridSpec, mut f: impl FnMut(f64, f64) -> Quaternion) -> QField {
        let mut samples = Vec::with_capacity(grid.len());
        for k1 in 0..grid.n1 {
            let t1 = grid.t1(k1);
            for k2 in 0..grid.n2 {
                samples.push(f(t1, grid.t2(k2)));
            }
        }
        QField { grid, samples }
    }

    pub fn one_hot(grid: GridSpec, k1: usize, k2: usize, value: Quaternion) -> QField {
        let mut f = QField::zero(grid);
        let idx = grid.index(k1, k2);
        f.samples[idx] = value;
        f
    }

    pub fn at(&self, k1: usize, k2: usize) -> Quaternion {
        self.samples[self.grid.index(k1, k2)]
    }

    pub fn set(&mut self, k1: usize, k2: usize, value: Quaternion) {
        let idx = self.grid.index(k1, k2);
        self.samples[idx] = value;
    }

    /// Left-endpoint quadrature of f·conj(g) over the grid.
    pub fn inner(&self, other: &QField) -> Result<Quaternion, FieldError> {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch);
        }
        let s = pairwise_sum_by(self.samples.len(), &mut |i| {
            self.samples[i] * other.samples[i].conj()
        });
        Ok(s.scale(self.grid.cell()))
    }

    pub fn norm_sqr(&self) -> f64 {
        let s = pairwise_sum_by(self.samples.len(), &mut |i| self.samples[i].norm_sqr());
        s * self.grid.cell()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: f64) -> QField {
        self.map(|q| q.scale(s))
    }

    pub fn conj(&self) -> QField {
        self.map(|q| q.conj())
    }

    pub fn left_mul(&self, c: Quaternion) -> QField {
        self.map(|q| c * q)
    }

    pub fn right_mul(&self, c: Quaternion) -> QField {
        self.map(|q| q * c)
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> QField {
        QField { grid: self.grid, samples: self.samples.iter().map(|&q| f(q)).collect() }
    }

    pub fn add(&self, other: &QField) -> Result<QField, FieldError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QField) -> Result<QField, FieldError> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise quaternion product self(t)·other(t); order matters.
    pub fn mul_pointwise(&self, other: &QField) -> Result<QField, FieldError> {
        self.zip(other, |a, b| a * b)
    }

    fn zip(
        &self,
        other: &QField,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> Result<QField, FieldError> {
        if self.grid != other.grid {
            return Err(FieldError::GridMismatch);
        }
        let samples =
            self.samples.iter().zip(&other.samples).map(|(&a, &b)| f(a, b)).collect();
        Ok(QField { grid: self.grid, samples })
    }

    /// f(t − k) for a grid-aligned displacement k, zero-filled at the edges.
    pub fn shift(&self, k1: f64, k2: f64) -> Result<QField, FieldError> {
        let s1 = grid_steps(k1, self.grid.dt1).ok_or(FieldError::NonGridShift(k1, k2))?;
        let s2 = grid_steps(k2, self.grid.dt2).ok_or(FieldError::NonGridShift(k1, k2))?;
        Ok(self.shift_steps(s1, s2))
    }

    /// f shifted by whole grid steps, zero-filled.
    pub fn shift_steps(&self, s1: i64, s2: i64) -> QField {
        let g = self.grid;
        let mut out = QField::zero(g);
        for k1 in 0..g.n1 {
            let src1 = k1 as i64 - s1;
            if src1 < 0 || src1 >= g.n1 as i64 {
                continue;
            }
            for k2 in 0..g.n2 {
                let src2 = k2 as i64 - s2;
                if src2 < 0 || src2 >= g.n2 as i64 {
                    continue;
                }
                out.samples[g.index(k1, k2)] =
                    self.samples[g.index(src1 as usize, src2 as usize)];
            }
        }
        out
    }

    /// exp_i(t1·w1) · f(t) · exp_j(t2·w2).
    pub fn modulate(&self, w1: f64, w2: f64) -> QField {
        let g = self.grid;
        let mut samples = Vec::with_capacity(g.len());
        for k1 in 0..g.n1 {
            let li = Quaternion::exp_i(g.t1(k1) * w1);
            for k2 in 0..g.n2 {
                let rj = Quaternion::exp_j(g.t2(k2) * w2);
                samples.push(li * self.samples[g.index(k1, k2)] * rj);
            }
        }
        QField { grid: g, samples }
    }

    /// f(−t); node 0 per axis has no mirror image on the grid and is zeroed.
    pub fn parity(&self) -> Result<QField, FieldError> {
        if !self.grid.is_symmetric() {
            return Err(FieldError::AsymmetricGrid);
        }
        let g = self.grid;
        let mut out = QField::zero(g);
        for k1 in 1..g.n1 {
            for k2 in 1..g.n2 {
                out.samples[g.index(k1, k2)] = self.samples[g.index(g.n1 - k1, g.n2 - k2)];
            }
        }
        Ok(out)
    }
}

fn grid_steps(k: f64, dt: f64) -> Option<i64> {
    let steps = k / dt;
    let rounded = steps.round();
    if (steps - rounded).abs() <= 1e-9 {
        Some(rounded as i64)
    } else {
        None
    }
}

//! Coefficient tensors of the sliding-window transform.

use crate::freq::FreqGrid;
use crate::QolctError;
use quatfield::{pairwise_sum_by, GridSpec, Quaternion};

/// Coefficients C(u, w) on (window positions) × (frequency grid), row-major
/// over (iu1, iu2, m1, m2).
#[derive(Clone, Debug)]
pub struct CoeffTensor {
    pub ugrid: GridSpec,
    pub wgrid: FreqGrid,
    pub samples: Vec<Quaternion>,
}

impl CoeffTensor {
    pub fn new(
        ugrid: GridSpec,
        wgrid: FreqGrid,
        samples: Vec<Quaternion>,
    ) -> Result<CoeffTensor, QolctError> {
        if samples.len() != ugrid.len() * wgrid.len() {
            return Err(QolctError::TensorMismatch);
        }
        Ok(CoeffTensor { ugrid, wgrid, samples })
    }

    pub fn zero(ugrid: GridSpec, wgrid: FreqGrid) -> CoeffTensor {
        CoeffTensor {
            ugrid,
            wgrid,
            samples: vec![Quaternion::ZERO; ugrid.len() * wgrid.len()],
        }
    }

    pub fn index(&self, iu1: usize, iu2: usize, m1: usize, m2: usize) -> usize {
        self.ugrid.index(iu1, iu2) * self.wgrid.len() + self.wgrid.index(m1, m2)
    }

    pub fn at(&self, iu1: usize, iu2: usize, m1: usize, m2: usize) -> Quaternion {
        self.samples[self.index(iu1, iu2, m1, m2)]
    }

    /// All w samples for one window position.
    pub fn u_slice(&self, iu1: usize, iu2: usize) -> &[Quaternion] {
        let wlen = self.wgrid.len();
        let base = self.ugrid.index(iu1, iu2) * wlen;
        &self.samples[base..base + wlen]
    }

    /// Quadrature cell du·dw.
    pub fn cell(&self) -> f64 {
        self.ugrid.cell() * self.wgrid.cell()
    }

    /// ∬ |C|² du dw, reduced per u slice and then across slices so streaming
    /// consumers can reproduce it bit for bit.
    pub fn energy(&self) -> f64 {
        let wlen = self.wgrid.len();
        let s = pairwise_sum_by(self.ugrid.len(), &mut |iu| {
            let base = iu * wlen;
            pairwise_sum_by(wlen, &mut |i| self.samples[base + i].norm_sqr())
        });
        s * self.cell()
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }
}

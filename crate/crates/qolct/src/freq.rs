//! Frequency-domain grids.

use crate::{OlctParams, QolctError};
use quatfield::GridSpec;
use std::f64::consts::PI;

/// 2D frequency grid; axis s samples w_s(m) = origin_s + m·dw_s. dw keeps the
/// sign of b; measures use |dw|.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FreqGrid {
    pub n1: usize,
    pub n2: usize,
    pub dw1: f64,
    pub dw2: f64,
    pub origin1: f64,
    pub origin2: f64,
    pub aligned: bool,
}

impl FreqGrid {
    /// w_m = p + b·(2π/(n·dt))·(m − n/2) per axis; on this grid the discrete
    /// kernel columns are exactly orthogonal, so the adjoint inverts.
    pub fn aligned(
        grid: &GridSpec,
        p1: &OlctParams,
        p2: &OlctParams,
    ) -> Result<FreqGrid, QolctError> {
        if p1.is_degenerate() || p2.is_degenerate() {
            return Err(QolctError::DegenerateB);
        }
        let dw1 = p1.b * 2.0 * PI / (grid.n1 as f64 * grid.dt1);
        let dw2 = p2.b * 2.0 * PI / (grid.n2 as f64 * grid.dt2);
        Ok(FreqGrid {
            n1: grid.n1,
            n2: grid.n2,
            dw1,
            dw2,
            origin1: p1.p - (grid.n1 / 2) as f64 * dw1,
            origin2: p2.p - (grid.n2 / 2) as f64 * dw2,
            aligned: true,
        })
    }

    pub fn explicit(n1: usize, n2: usize, dw1: f64, dw2: f64, origin1: f64, origin2: f64) -> FreqGrid {
        FreqGrid { n1, n2, dw1, dw2, origin1, origin2, aligned: false }
    }

    pub fn w1(&self, m: usize) -> f64 {
        self.origin1 + m as f64 * self.dw1
    }

    pub fn w2(&self, m: usize) -> f64 {
        self.origin2 + m as f64 * self.dw2
    }

    pub fn len(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Quadrature cell measure |dw1·dw2|.
    pub fn cell(&self) -> f64 {
        (self.dw1 * self.dw2).abs()
    }

    pub fn index(&self, m1: usize, m2: usize) -> usize {
        debug_assert!(m1 < self.n1 && m2 < self.n2);
        m1 * self.n2 + m2
    }
}

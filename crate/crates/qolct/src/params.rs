//! Per-axis transform parameters.

use crate::QolctError;

/// One axis of the transform: matrix (a b; c d) with ad − bc = 1 plus the
/// offsets (p, q).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OlctParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub p: f64,
    pub q: f64,
}

impl OlctParams {
    pub const UNIMODULAR_TOL: f64 = 1e-12;
    pub const DEGENERATE_B_TOL: f64 = 1e-12;

    pub fn new(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> Result<OlctParams, QolctError> {
        let det = a * d - b * c;
        if (det - 1.0).abs() > Self::UNIMODULAR_TOL {
            return Err(QolctError::NotUnimodular(det));
        }
        Ok(OlctParams { a, b, c, d, p, q })
    }

    /// (0, 1, −1, 0 | 0, 0); reduces the kernel to the Fourier one.
    pub fn fourier() -> OlctParams {
        OlctParams { a: 0.0, b: 1.0, c: -1.0, d: 0.0, p: 0.0, q: 0.0 }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_degenerate(&self) -> bool {
        self.b.abs() <= Self::DEGENERATE_B_TOL
    }
}

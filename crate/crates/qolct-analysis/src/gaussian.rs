//! Separable Gaussian and rectangular reference signals.

use crate::AnalysisError;
use num_complex::Complex64;
use quatfield::{GridSpec, QField, Quaternion};

/// Separable sampled signal β·e^{−α1·t1²}·e^{−α2·t2²}: the first exponential
/// is complex in i and multiplies β from the left, the second is complex in j
/// and multiplies from the right.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianSpec {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub beta: Quaternion,
}

impl GaussianSpec {
    /// False for pure chirps, whose samples keep the modulus |β| everywhere.
    pub fn is_decaying(&self) -> bool {
        self.alpha1.re > 0.0 && self.alpha2.re > 0.0
    }
}

/// Pure chirp whose quadratic phase cancels the kernel's: α_s = i·a_s/(2·b_s),
/// so e^{−α_s·t²} undoes the kernel factor e^{i·a_s·t²/(2·b_s)}.
pub fn kernel_cancelling_chirp(
    p1: &qolct::OlctParams,
    p2: &qolct::OlctParams,
    beta: Quaternion,
) -> GaussianSpec {
    GaussianSpec {
        alpha1: Complex64::new(0.0, p1.a / (2.0 * p1.b)),
        alpha2: Complex64::new(0.0, p2.a / (2.0 * p2.b)),
        beta,
    }
}

pub fn make_gaussian(spec: &GaussianSpec, grid: GridSpec) -> QField {
    let GaussianSpec { alpha1, alpha2, beta } = *spec;
    QField::from_fn(grid, |t1, t2| {
        let e1 = (-alpha1 * t1 * t1).exp();
        let e2 = (-alpha2 * t2 * t2).exp();
        Quaternion::from_c_i(e1) * beta * Quaternion::from_c_j(e2)
    })
}

/// Square indicator window of half-width `a` on both axes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RectWindowSpec {
    pub a: f64,
}

/// Samples the indicator of the open square |t1| < a, |t2| < a. The
/// half-width must sit on the sample lattice of both axes so the quadrature
/// domain and the analytic one agree exactly.
pub fn make_rect_window(spec: &RectWindowSpec, grid: GridSpec) -> Result<QField, AnalysisError> {
    let a = spec.a;
    for dt in [grid.dt1, grid.dt2] {
        let steps = a / dt;
        if a <= 0.0 || (steps - steps.round()).abs() > 1e-9 || steps.round() < 1.0 {
            return Err(AnalysisError::OffGridHalfWidth);
        }
    }
    let (m1, m2) = (a - 1e-9 * grid.dt1, a - 1e-9 * grid.dt2);
    Ok(QField::from_fn(grid, |t1, t2| {
        if t1.abs() < m1 && t2.abs() < m2 {
            Quaternion::ONE
        } else {
            Quaternion::ZERO
        }
    }))
}

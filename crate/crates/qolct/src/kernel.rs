//! Pointwise kernel evaluation.

use crate::{OlctParams, QolctError};
use quatfield::Quaternion;
use std::f64::consts::{FRAC_PI_4, PI};

/// Which complex plane a factor lives in.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SplitUnit {
    I,
    J,
}

/// Kernel phase; the −πb/2 bracket term is the constant −π/4 for every b.
pub fn kernel_phase(par: &OlctParams, t: f64, w: f64) -> f64 {
    (par.a * t * t - 2.0 * t * (w - par.p) - 2.0 * w * (par.d * par.p - par.b * par.q)
        + par.d * (w * w + par.p * par.p))
        / (2.0 * par.b)
        - FRAC_PI_4
}

pub fn kernel_amp(par: &OlctParams) -> f64 {
    1.0 / (2.0 * PI * par.b.abs()).sqrt()
}

/// Left kernel value, complex in i.
pub fn kernel_left(par: &OlctParams, t: f64, w: f64) -> Result<Quaternion, QolctError> {
    if par.is_degenerate() {
        return Err(QolctError::DegenerateB);
    }
    Ok(Quaternion::exp_i(kernel_phase(par, t, w)).scale(kernel_amp(par)))
}

/// Right kernel value, complex in j.
pub fn kernel_right(par: &OlctParams, t: f64, w: f64) -> Result<Quaternion, QolctError> {
    if par.is_degenerate() {
        return Err(QolctError::DegenerateB);
    }
    Ok(Quaternion::exp_j(kernel_phase(par, t, w)).scale(kernel_amp(par)))
}

/// Degenerate-axis factor √d·exp_unit((cd/2)(w−p)² + wp).
pub fn chirp_factor(par: &OlctParams, w: f64, unit: SplitUnit) -> Result<Quaternion, QolctError> {
    if par.d <= 0.0 {
        return Err(QolctError::NegativeD(par.d));
    }
    let dw = w - par.p;
    let theta = par.c * par.d / 2.0 * dw * dw + w * par.p;
    let e = match unit {
        SplitUnit::I => Quaternion::exp_i(theta),
        SplitUnit::J => Quaternion::exp_j(theta),
    };
    Ok(e.scale(par.d.sqrt()))
}

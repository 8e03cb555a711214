//! Closed-form coefficients of the chirp-times-rectangle signal under a
//! rectangular window of the same half-width.

use crate::AnalysisError;
use num_complex::Complex64;
use qolct::OlctParams;
use quatfield::Quaternion;
use std::f64::consts::PI;

fn phase(par: &OlctParams, w: f64) -> f64 {
    (2.0 * w * (par.b * par.q - par.d * par.p) + par.d * (w * w + par.p * par.p)
        + PI * par.b / 2.0)
        / (2.0 * par.b)
}

/// One axis of the closed form: √(b/2π)·e^{iφ(w)}·[e^{iδ(u+a)/b} −
/// e^{iδ(u−a)/b}]/(w − p) with δ = p − w. Derived for b > 0.
pub fn chirp_rect_axis_factor(
    par: &OlctParams,
    w: f64,
    u: f64,
    a: f64,
) -> Result<Complex64, AnalysisError> {
    assert!(par.b > 0.0, "closed form derived for b > 0");
    let delta = par.p - w;
    if delta.abs() <= 1e-9 {
        return Err(AnalysisError::RemovableSingularity);
    }
    let diff = Complex64::new(0.0, delta * (u + a) / par.b).exp()
        - Complex64::new(0.0, delta * (u - a) / par.b).exp();
    let amp = (par.b / (2.0 * PI)).sqrt();
    Ok(amp * Complex64::new(0.0, phase(par, w)).exp() * diff / (w - par.p))
}

/// Value the axis factor tends to as w → p: the difference quotient goes to
/// −2ia/b regardless of u.
pub fn chirp_rect_axis_limit(par: &OlctParams, a: f64) -> Complex64 {
    assert!(par.b > 0.0, "closed form derived for b > 0");
    let amp = (par.b / (2.0 * PI)).sqrt();
    amp * Complex64::new(0.0, phase(par, par.p)).exp() * Complex64::new(0.0, -2.0 * a / par.b)
}

/// Full coefficient at (u, w): first-axis factor in i on the left of β,
/// second-axis factor in j on the right.
pub fn chirp_rect_coefficient(
    u1: f64,
    u2: f64,
    w1: f64,
    w2: f64,
    p1: &OlctParams,
    p2: &OlctParams,
    a: f64,
    beta: Quaternion,
) -> Result<Quaternion, AnalysisError> {
    let f1 = chirp_rect_axis_factor(p1, w1, u1, a)?;
    let f2 = chirp_rect_axis_factor(p2, w2, u2, a)?;
    Ok(Quaternion::from_c_i(f1) * beta * Quaternion::from_c_j(f2))
}

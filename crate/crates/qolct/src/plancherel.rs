//! Energy-ratio diagnostics.

use crate::engine::QolctPlan;
use crate::params::OlctParams;
use crate::QolctError;
use quatfield::QField;

/// ‖transform of f‖² / ‖f‖² with quadrature weights, on the aligned grid.
/// Unity up to roundoff for every nonzero signal; deviations indicate a
/// broken kernel or grid, not truncation.
pub fn plancherel_ratio(
    f: &QField,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<f64, QolctError> {
    let nf = f.norm_sqr();
    if nf == 0.0 {
        return Err(QolctError::ZeroSignal);
    }
    let plan = QolctPlan::new(f.grid, *p1, *p2)?;
    Ok(plan.forward(f)?.norm_sqr() / nf)
}

/// Spectrum energy against a continuum reference norm². Unlike the discrete
/// ratio, this deviates from 1 when the grid truncates the signal, so it
/// exposes an undersized grid.
pub fn plancherel_analytic_ratio(
    f: &QField,
    p1: &OlctParams,
    p2: &OlctParams,
    reference_norm_sqr: f64,
) -> Result<f64, QolctError> {
    if reference_norm_sqr <= 0.0 {
        return Err(QolctError::ZeroSignal);
    }
    let plan = QolctPlan::new(f.grid, *p1, *p2)?;
    Ok(plan.forward(f)?.norm_sqr() / reference_norm_sqr)
}

//! Inequality checks on windowed spectra: product of spreads, logarithmic
//! weight, sup norm, concentration regions, and restricted-energy bounds.

use crate::constants::log_constant;
use crate::spread::{coefficient_profile, spatial_spread, Axis};
use crate::AnalysisError;
use qolct::{analyze_map_u, CoeffTensor, FreqGrid, OlctParams, QolctError, QolctPlan, WindowSpec};
use quatfield::{pairwise_sum, pairwise_sum_by, QField};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug)]
pub struct HeisenbergReport {
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Product of time and frequency spreads against (|b_k|/2)·‖f‖²·‖g‖², one
/// report per axis. Spreads are raw moments about the origin.
pub fn heisenberg_check(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<[HeisenbergReport; 2], AnalysisError> {
    if f.norm_sqr() == 0.0 {
        return Err(AnalysisError::ZeroSignal);
    }
    let profile = coefficient_profile(f, window, p1, p2)?;
    let e = f.norm_sqr() * window.norm_sqr();
    let report = |spread_t: f64, spread_w: f64, b: f64| {
        let lhs = spread_t.sqrt() * spread_w.sqrt();
        let rhs = 0.5 * b.abs() * e;
        HeisenbergReport { lhs, rhs, ratio: lhs / rhs }
    };
    Ok([
        report(spatial_spread(f, Axis::First), profile.spread1, p1.b),
        report(spatial_spread(f, Axis::Second), profile.spread2, p2.b),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogMode {
    /// ln of the Euclidean length of (ξ1/b1, ξ2/b2); the reading the checks use.
    Euclidean,
    /// ln|ξ1/b1| + ln|ξ2/b2|, kept only to compare the two readings.
    ComponentSum,
}

#[derive(Clone, Copy, Debug)]
pub struct LogReport {
    pub lhs: f64,
    pub rhs: f64,
    pub gap: f64,
}

/// Logarithmic bound: ∬ ln|ξ/b|·|C|² du dξ + ‖g‖²·∫ ln|t|·|f|² dt against
/// D·‖f‖²·‖g‖². Samples where the log argument is exactly zero contribute
/// nothing; the integrand's limit there is zero.
pub fn log_uncertainty_check(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    mode: LogMode,
) -> Result<LogReport, AnalysisError> {
    if f.norm_sqr() == 0.0 {
        return Err(AnalysisError::ZeroSignal);
    }
    let ln_sqrt = |r2: f64| if r2 == 0.0 { 0.0 } else { 0.5 * r2.ln() };
    let wgrid = FreqGrid::aligned(&f.grid, p1, p2)?;
    let wlen = wgrid.len();
    let weights: Vec<f64> = (0..wlen)
        .map(|i| {
            let x1 = wgrid.w1(i / wgrid.n2) / p1.b;
            let x2 = wgrid.w2(i % wgrid.n2) / p2.b;
            match mode {
                LogMode::Euclidean => ln_sqrt(x1 * x1 + x2 * x2),
                LogMode::ComponentSum => ln_sqrt(x1 * x1) + ln_sqrt(x2 * x2),
            }
        })
        .collect();
    let mut per_u = Vec::with_capacity(f.grid.len());
    analyze_map_u(f, window, p1, p2, &mut |_, _, spec| {
        per_u.push(pairwise_sum_by(wlen, &mut |i| weights[i] * spec.samples[i].norm_sqr()));
    })?;
    let spectral = pairwise_sum(&per_u) * (f.grid.cell() * wgrid.cell());

    let grid = f.grid;
    let time_raw: f64 = pairwise_sum_by(grid.len(), &mut |idx| {
        let t1 = grid.t1(idx / grid.n2);
        let t2 = grid.t2(idx % grid.n2);
        ln_sqrt(t1 * t1 + t2 * t2) * f.samples[idx].norm_sqr()
    });
    let lhs = spectral + window.norm_sqr() * (time_raw * grid.cell());
    let rhs = log_constant() * f.norm_sqr() * window.norm_sqr();
    Ok(LogReport { lhs, rhs, gap: lhs - rhs })
}

#[derive(Clone, Copy, Debug)]
pub struct SupReport {
    pub sup: f64,
    pub bound: f64,
}

/// max |C| against ‖f‖·‖g‖/(2π·√|b1·b2|).
pub fn sup_bound_check(
    c: &CoeffTensor,
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> SupReport {
    let bound = f.norm() * window.norm() / (2.0 * PI * (p1.b * p2.b).abs().sqrt());
    SupReport { sup: c.max_abs(), bound }
}

/// Subset of tensor cells with its du·dw measure.
#[derive(Clone, Debug)]
pub struct ConcentrationRegion {
    pub mask: Vec<bool>,
    pub measure: f64,
}

impl ConcentrationRegion {
    pub fn from_mask(mask: Vec<bool>, cell: f64) -> ConcentrationRegion {
        let count = mask.iter().filter(|&&m| m).count();
        ConcentrationRegion { mask, measure: count as f64 * cell }
    }
}

#[derive(Clone, Debug)]
pub struct ConcentrationReport {
    pub region: ConcentrationRegion,
    /// ∬|C|² energy inside the region
    pub captured: f64,
}

/// Smallest-measure region holding at least `fraction` of unit energy: cells
/// join in descending |C|² order, so the result is a superlevel set. The
/// tensor must carry unit energy, which unit-norm signal and window give.
pub fn concentration_measure(
    c: &CoeffTensor,
    fraction: f64,
) -> Result<ConcentrationReport, AnalysisError> {
    let total = c.energy();
    if (total - 1.0).abs() > 1e-2 {
        return Err(AnalysisError::NotNormalized(total));
    }
    let cell = c.cell();
    let mags: Vec<f64> = c.samples.iter().map(|q| q.norm_sqr()).collect();
    let mut order: Vec<u32> = (0..mags.len() as u32).collect();
    order.sort_unstable_by(|&a, &b| mags[b as usize].total_cmp(&mags[a as usize]));
    let mut mask = vec![false; mags.len()];
    let mut captured = 0.0;
    let mut count = 0usize;
    for idx in order {
        if captured >= fraction {
            break;
        }
        mask[idx as usize] = true;
        captured += mags[idx as usize] * cell;
        count += 1;
    }
    Ok(ConcentrationReport {
        region: ConcentrationRegion { mask, measure: count as f64 * cell },
        captured,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct LocalReport {
    pub lhs: f64,
    pub rhs: f64,
}

/// ‖f‖·‖g‖ against (1 − μ(E))^{−1/2}·(energy of C outside E)^{1/2}.
pub fn local_uncertainty_check(
    c: &CoeffTensor,
    f: &QField,
    window: &WindowSpec,
    region: &ConcentrationRegion,
) -> Result<LocalReport, AnalysisError> {
    assert_eq!(region.mask.len(), c.samples.len(), "region built on a different tensor");
    if region.measure >= 1.0 {
        return Err(AnalysisError::MeasureTooLarge(region.measure));
    }
    let wlen = c.wgrid.len();
    let rest = pairwise_sum_by(c.ugrid.len(), &mut |iu| {
        let base = iu * wlen;
        pairwise_sum_by(wlen, &mut |i| {
            if region.mask[base + i] {
                0.0
            } else {
                c.samples[base + i].norm_sqr()
            }
        })
    }) * c.cell();
    Ok(LocalReport {
        lhs: f.norm() * window.norm(),
        rhs: rest.sqrt() / (1.0 - region.measure).sqrt(),
    })
}

/// Moment form of the restricted-energy bound: ‖f‖·‖g‖ against
/// C(α)·(∬ |(u,ξ)|^{2α}·|C|² du dξ)^{1/2} with
/// C(α) = 1/(r0^α·√(1 − μ(B))) and B the |(u,ξ)| < r0 ball.
pub fn local_moment_check(
    c: &CoeffTensor,
    f: &QField,
    window: &WindowSpec,
    alpha: f64,
    r0: f64,
) -> Result<LocalReport, AnalysisError> {
    assert!(alpha > 0.0, "moment order must be positive");
    assert!(r0 > 0.0 && r0 <= 1.0, "ball radius must lie in (0, 1]");
    let wlen = c.wgrid.len();
    let radius_sq = |iu: usize, i: usize| {
        let u1 = c.ugrid.t1(iu / c.ugrid.n2);
        let u2 = c.ugrid.t2(iu % c.ugrid.n2);
        let x1 = c.wgrid.w1(i / c.wgrid.n2);
        let x2 = c.wgrid.w2(i % c.wgrid.n2);
        u1 * u1 + u2 * u2 + x1 * x1 + x2 * x2
    };
    let mut ball_cells = 0usize;
    for iu in 0..c.ugrid.len() {
        for i in 0..wlen {
            if radius_sq(iu, i) < r0 * r0 {
                ball_cells += 1;
            }
        }
    }
    let mu = ball_cells as f64 * c.cell();
    if mu >= 1.0 {
        return Err(AnalysisError::MeasureTooLarge(mu));
    }
    let moment = pairwise_sum_by(c.ugrid.len(), &mut |iu| {
        let base = iu * wlen;
        pairwise_sum_by(wlen, &mut |i| {
            radius_sq(iu, i).powf(alpha) * c.samples[base + i].norm_sqr()
        })
    }) * c.cell();
    Ok(LocalReport {
        lhs: f.norm() * window.norm(),
        rhs: moment.sqrt() / (r0.powf(alpha) * (1.0 - mu).sqrt()),
    })
}

/// Residual of the spread-reduction identity: ‖g‖²·Σ t_k²·|f|² against the
/// same moment of the inverse transforms of the coefficient slices, summed
/// over u. Zero when both sides vanish.
pub fn windowed_spread_check(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    axis: Axis,
) -> Result<f64, AnalysisError> {
    let plan = QolctPlan::new(f.grid, *p1, *p2)?;
    let lhs = window.norm_sqr() * spatial_spread(f, axis);
    let grid = f.grid;
    let mut per_u = Vec::with_capacity(grid.len());
    for iu1 in 0..grid.n1 {
        for iu2 in 0..grid.n2 {
            let shifted = window
                .g
                .shift(grid.t1(iu1), grid.t2(iu2))
                .map_err(QolctError::from)?;
            let windowed = f.mul_pointwise(&shifted.conj()).map_err(QolctError::from)?;
            let back = plan.inverse(&plan.forward(&windowed)?)?;
            per_u.push(spatial_spread(&back, axis));
        }
    }
    let rhs = pairwise_sum(&per_u) * grid.cell();
    let denom = lhs.abs().max(rhs.abs());
    Ok(if denom == 0.0 { 0.0 } else { (lhs - rhs).abs() / denom })
}

//! b = 0 branches: a degenerate axis stops integrating and becomes a
//! chirp-scaled resampling of the signal, while a regular axis keeps its
//! kernel quadrature.

use crate::engine::{qolct_forward, Provenance, QSpectrum};
use crate::freq::FreqGrid;
use crate::kernel::{chirp_factor, kernel_left, kernel_right, SplitUnit};
use crate::params::OlctParams;
use crate::QolctError;
use quatfield::{pairwise_sum_by, GridSpec, QField, Quaternion};
use std::f64::consts::PI;

/// Natural frequency grid for the degenerate branch: degenerate axes take
/// w_m = p + t_m/d so the resample target d·(w−p) lands back on the time
/// grid; regular axes take the aligned spacing.
pub fn degenerate_freq_grid(
    grid: &GridSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<FreqGrid, QolctError> {
    let (dw1, origin1, deg1) = axis_nodes(grid.n1, grid.dt1, grid.origin1, p1)?;
    let (dw2, origin2, deg2) = axis_nodes(grid.n2, grid.dt2, grid.origin2, p2)?;
    Ok(FreqGrid {
        n1: grid.n1,
        n2: grid.n2,
        dw1,
        dw2,
        origin1,
        origin2,
        aligned: !deg1 && !deg2,
    })
}

fn axis_nodes(
    n: usize,
    dt: f64,
    origin: f64,
    par: &OlctParams,
) -> Result<(f64, f64, bool), QolctError> {
    if par.is_degenerate() {
        if par.d <= 0.0 {
            return Err(QolctError::NegativeD(par.d));
        }
        Ok((dt / par.d, par.p + origin / par.d, true))
    } else {
        let dw = par.b * 2.0 * PI / (n as f64 * dt);
        Ok((dw, par.p - (n / 2) as f64 * dw, false))
    }
}

/// Transform with at least one degenerate axis; with none it reduces to the
/// direct path.
pub fn qolct_degenerate(
    f: &QField,
    p1: &OlctParams,
    p2: &OlctParams,
    wgrid: &FreqGrid,
) -> Result<QSpectrum, QolctError> {
    let g = f.grid;
    match (p1.is_degenerate(), p2.is_degenerate()) {
        (false, false) => qolct_forward(f, p1, p2, wgrid),
        (true, false) => {
            let right = right_matrix(p2, &g, wgrid)?;
            let mut samples = vec![Quaternion::ZERO; wgrid.len()];
            for m1 in 0..wgrid.n1 {
                let w = wgrid.w1(m1);
                let Some(k1) = resample_index(p1.d * (w - p1.p), g.origin1, g.dt1, g.n1)?
                else {
                    continue;
                };
                let chirp = chirp_factor(p1, w, SplitUnit::I)?;
                for m2 in 0..wgrid.n2 {
                    let row = &right[m2 * g.n2..(m2 + 1) * g.n2];
                    let s = pairwise_sum_by(g.n2, &mut |k2| f.at(k1, k2) * row[k2]);
                    samples[wgrid.index(m1, m2)] = chirp * s.scale(g.dt2);
                }
            }
            Ok(QSpectrum { grid: *wgrid, samples, provenance: Provenance::Direct })
        }
        (false, true) => {
            let left = left_matrix(p1, &g, wgrid)?;
            let mut samples = vec![Quaternion::ZERO; wgrid.len()];
            for m2 in 0..wgrid.n2 {
                let w = wgrid.w2(m2);
                let Some(k2) = resample_index(p2.d * (w - p2.p), g.origin2, g.dt2, g.n2)?
                else {
                    continue;
                };
                let chirp = chirp_factor(p2, w, SplitUnit::J)?;
                for m1 in 0..wgrid.n1 {
                    let row = &left[m1 * g.n1..(m1 + 1) * g.n1];
                    let s = pairwise_sum_by(g.n1, &mut |k1| row[k1] * f.at(k1, k2));
                    samples[wgrid.index(m1, m2)] = s.scale(g.dt1) * chirp;
                }
            }
            Ok(QSpectrum { grid: *wgrid, samples, provenance: Provenance::Direct })
        }
        (true, true) => {
            let mut samples = vec![Quaternion::ZERO; wgrid.len()];
            for m1 in 0..wgrid.n1 {
                let w1 = wgrid.w1(m1);
                let Some(k1) = resample_index(p1.d * (w1 - p1.p), g.origin1, g.dt1, g.n1)?
                else {
                    continue;
                };
                let li = chirp_factor(p1, w1, SplitUnit::I)?;
                for m2 in 0..wgrid.n2 {
                    let w2 = wgrid.w2(m2);
                    let Some(k2) =
                        resample_index(p2.d * (w2 - p2.p), g.origin2, g.dt2, g.n2)?
                    else {
                        continue;
                    };
                    let rj = chirp_factor(p2, w2, SplitUnit::J)?;
                    samples[wgrid.index(m1, m2)] = li * f.at(k1, k2) * rj;
                }
            }
            Ok(QSpectrum { grid: *wgrid, samples, provenance: Provenance::Direct })
        }
    }
}

/// Grid index of the resample target t, None when t falls off the grid.
fn resample_index(
    t: f64,
    origin: f64,
    dt: f64,
    n: usize,
) -> Result<Option<usize>, QolctError> {
    let steps = (t - origin) / dt;
    let k = steps.round();
    if (steps - k).abs() > 1e-9 {
        return Err(QolctError::OffGridResample);
    }
    if k < 0.0 || k >= n as f64 {
        return Ok(None);
    }
    Ok(Some(k as usize))
}

fn left_matrix(
    par: &OlctParams,
    g: &GridSpec,
    wgrid: &FreqGrid,
) -> Result<Vec<Quaternion>, QolctError> {
    let mut out = Vec::with_capacity(wgrid.n1 * g.n1);
    for m in 0..wgrid.n1 {
        for k in 0..g.n1 {
            out.push(kernel_left(par, g.t1(k), wgrid.w1(m))?);
        }
    }
    Ok(out)
}

fn right_matrix(
    par: &OlctParams,
    g: &GridSpec,
    wgrid: &FreqGrid,
) -> Result<Vec<Quaternion>, QolctError> {
    let mut out = Vec::with_capacity(wgrid.n2 * g.n2);
    for m in 0..wgrid.n2 {
        for k in 0..g.n2 {
            out.push(kernel_right(par, g.t2(k), wgrid.w2(m))?);
        }
    }
    Ok(out)
}

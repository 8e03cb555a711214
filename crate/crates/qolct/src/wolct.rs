//! Sliding-window transform: analysis, synthesis, and the residual checks
//! that pin down its algebraic behavior.

use crate::coeff::CoeffTensor;
use crate::degenerate::qolct_degenerate;
use crate::engine::{qolct_forward, Provenance, QSpectrum, QolctPlan};
use crate::freq::FreqGrid;
use crate::params::OlctParams;
use crate::window::WindowSpec;
use crate::QolctError;
use quatfield::{pairwise_sum_by, FieldError, GridSpec, QField, Quaternion};
use rayon::prelude::*;

/// C(u, w) = transform of t ↦ f(t)·conj(g(t − u)) at every u node.
///
/// Runs the fast path when `wgrid` is the aligned grid, the direct quadrature
/// otherwise, and the degenerate branch when a degenerate axis is requested.
/// Parallel over u; every slice lands in its own output segment.
pub fn analyze(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    ugrid: &GridSpec,
    wgrid: &FreqGrid,
) -> Result<CoeffTensor, QolctError> {
    if f.grid != window.g.grid {
        return Err(QolctError::Field(FieldError::GridMismatch));
    }
    let degenerate = p1.is_degenerate() || p2.is_degenerate();
    let plan = if degenerate {
        None
    } else if *wgrid == FreqGrid::aligned(&f.grid, p1, p2)? {
        Some(QolctPlan::new(f.grid, *p1, *p2)?)
    } else {
        None
    };

    let wlen = wgrid.len();
    let mut samples = vec![Quaternion::ZERO; ugrid.len() * wlen];
    samples
        .par_chunks_mut(wlen)
        .enumerate()
        .try_for_each(|(iu, out)| -> Result<(), QolctError> {
            let iu1 = iu / ugrid.n2;
            let iu2 = iu % ugrid.n2;
            let shifted = window.g.shift(ugrid.t1(iu1), ugrid.t2(iu2))?;
            let windowed = f.mul_pointwise(&shifted.conj())?;
            let spec = match &plan {
                Some(plan) => plan.forward(&windowed)?,
                None if degenerate => qolct_degenerate(&windowed, p1, p2, wgrid)?,
                None => qolct_forward(&windowed, p1, p2, wgrid)?,
            };
            out.copy_from_slice(&spec.samples);
            Ok(())
        })?;
    CoeffTensor::new(*ugrid, *wgrid, samples)
}

/// `analyze` over the full signal grid and the aligned frequency grid.
pub fn analyze_default(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<CoeffTensor, QolctError> {
    let wgrid = FreqGrid::aligned(&f.grid, p1, p2)?;
    analyze(f, window, p1, p2, &f.grid, &wgrid)
}

/// Streaming variant of `analyze_default`: visits each u slice in row-major
/// order without materializing the tensor. The slices are the same values
/// `analyze_default` would store.
pub fn analyze_map_u(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    visit: &mut dyn FnMut(usize, usize, &QSpectrum),
) -> Result<(), QolctError> {
    if f.grid != window.g.grid {
        return Err(QolctError::Field(FieldError::GridMismatch));
    }
    let plan = QolctPlan::new(f.grid, *p1, *p2)?;
    for iu1 in 0..f.grid.n1 {
        for iu2 in 0..f.grid.n2 {
            let shifted = window.g.shift(f.grid.t1(iu1), f.grid.t2(iu2))?;
            let windowed = f.mul_pointwise(&shifted.conj())?;
            let spec = plan.forward(&windowed)?;
            visit(iu1, iu2, &spec);
        }
    }
    Ok(())
}

/// Reconstruction: f̂(t) = inv(⟨g2, g1⟩) · ∬ inverse(C(u,·))(t)·g2(t−u) du,
/// where C was analyzed against g1. Pairwise over u.
pub fn synthesize(
    c: &CoeffTensor,
    g1: &WindowSpec,
    g2: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<QField, QolctError> {
    if g1.g.grid != g2.g.grid {
        return Err(QolctError::Field(FieldError::GridMismatch));
    }
    let overlap = g2.g.inner(&g1.g)?;
    if overlap.w.abs() <= 1e-9 * g1.norm() * g2.norm() {
        return Err(QolctError::NonInvertibleWindowPair);
    }
    let tgrid = g2.g.grid;
    if c.ugrid != tgrid {
        return Err(QolctError::TensorMismatch);
    }
    let plan = QolctPlan::new(tgrid, *p1, *p2)?;
    if c.wgrid != plan.wgrid() {
        return Err(QolctError::UnalignedGrid);
    }
    let rec = synth_range(c, &plan, g2, 0, c.ugrid.len())?;
    let inv = overlap.inverse();
    Ok(rec.map(|q| inv * q).scale(c.ugrid.cell()))
}

fn synth_range(
    c: &CoeffTensor,
    plan: &QolctPlan,
    g2: &WindowSpec,
    lo: usize,
    hi: usize,
) -> Result<QField, QolctError> {
    if hi == lo {
        return Ok(QField::zero(c.ugrid));
    }
    if hi - lo == 1 {
        let iu1 = lo / c.ugrid.n2;
        let iu2 = lo % c.ugrid.n2;
        let spec = QSpectrum {
            grid: c.wgrid,
            samples: c.u_slice(iu1, iu2).to_vec(),
            provenance: Provenance::Fast,
        };
        let field = plan.inverse(&spec)?;
        let shifted = g2.g.shift(c.ugrid.t1(iu1), c.ugrid.t2(iu2))?;
        return field.mul_pointwise(&shifted).map_err(Into::into);
    }
    let mid = lo + (hi - lo) / 2;
    let (a, b) = rayon::join(
        || synth_range(c, plan, g2, lo, mid),
        || synth_range(c, plan, g2, mid, hi),
    );
    a?.add(&b?).map_err(Into::into)
}

/// ∬ C1·conj(C2) du dw, reduced per u slice then across slices.
pub fn coeff_inner(c1: &CoeffTensor, c2: &CoeffTensor) -> Result<Quaternion, QolctError> {
    if c1.ugrid != c2.ugrid || c1.wgrid != c2.wgrid {
        return Err(QolctError::TensorMismatch);
    }
    let wlen = c1.wgrid.len();
    let s = pairwise_sum_by(c1.ugrid.len(), &mut |iu| {
        let base = iu * wlen;
        pairwise_sum_by(wlen, &mut |i| {
            c1.samples[base + i] * c2.samples[base + i].conj()
        })
    });
    Ok(s.scale(c1.cell()))
}

fn lattice_steps(x: f64, step: f64) -> Result<i64, QolctError> {
    let r = x / step;
    let k = r.round();
    if (r - k).abs() > 1e-9 {
        return Err(QolctError::OffGridTarget);
    }
    Ok(k as i64)
}

fn locate(x: f64, origin: f64, step: f64, n: usize) -> Result<usize, QolctError> {
    let r = (x - origin) / step;
    let k = r.round();
    if (r - k).abs() > 1e-9 || k < 0.0 || k >= n as f64 {
        return Err(QolctError::OffGridTarget);
    }
    Ok(k as usize)
}

/// Residual of the time-shift covariance: coefficients of f(·−k) against
/// phase·C(u−k, w−a·k)·phase, maximized over the comparable index range and
/// scaled by max|C|. Both k/dt and a·k/dw must be whole.
pub fn check_time_shift(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    k1: f64,
    k2: f64,
) -> Result<f64, QolctError> {
    let g = f.grid;
    let s1 = lattice_steps(k1, g.dt1)?;
    let s2 = lattice_steps(k2, g.dt2)?;
    let wg = FreqGrid::aligned(&g, p1, p2)?;
    let msh1 = lattice_steps(p1.a * k1, wg.dw1)?;
    let msh2 = lattice_steps(p2.a * k2, wg.dw2)?;

    let cl = analyze_default(&f.shift_steps(s1, s2), window, p1, p2)?;
    let cr = analyze_default(f, window, p1, p2)?;
    let scale = cr.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }

    let li: Vec<Quaternion> = (0..wg.n1)
        .map(|m| {
            Quaternion::exp_i(
                p1.a * k1 * p1.q - p1.c * k1 * p1.p + p1.c * k1 * wg.w1(m)
                    - p1.a * p1.c * k1 * k1 / 2.0,
            )
        })
        .collect();
    let rj: Vec<Quaternion> = (0..wg.n2)
        .map(|m| {
            Quaternion::exp_j(
                p2.a * k2 * p2.q - p2.c * k2 * p2.p + p2.c * k2 * wg.w2(m)
                    - p2.a * p2.c * k2 * k2 / 2.0,
            )
        })
        .collect();

    let mut worst = 0.0_f64;
    for i in 0..g.n1 {
        let Some(ii) = offset_index(i, -s1, g.n1) else { continue };
        for j in 0..g.n2 {
            let Some(jj) = offset_index(j, -s2, g.n2) else { continue };
            for m1 in 0..wg.n1 {
                let Some(mm1) = offset_index(m1, -msh1, wg.n1) else { continue };
                for m2 in 0..wg.n2 {
                    let Some(mm2) = offset_index(m2, -msh2, wg.n2) else { continue };
                    let pred = li[m1] * cr.at(ii, jj, mm1, mm2) * rj[m2];
                    worst = worst.max((cl.at(i, j, m1, m2) - pred).norm());
                }
            }
        }
    }
    Ok(worst / scale)
}

fn offset_index(i: usize, delta: i64, n: usize) -> Option<usize> {
    let v = i as i64 + delta;
    if v < 0 || v >= n as i64 {
        None
    } else {
        Some(v as usize)
    }
}

/// Residual of the modulation covariance at the node w0: coefficients of
/// exp_i(t1·w0_1)·f·exp_j(t2·w0_2) at w0 against phase·C(u, (1−b)·w0)·phase.
/// Both w0 and (1−b)·w0 must be w-grid nodes.
pub fn check_modulation(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    w0_1: f64,
    w0_2: f64,
) -> Result<f64, QolctError> {
    let g = f.grid;
    let wg = FreqGrid::aligned(&g, p1, p2)?;
    let i0 = locate(w0_1, wg.origin1, wg.dw1, wg.n1)?;
    let j0 = locate(w0_2, wg.origin2, wg.dw2, wg.n2)?;
    let ii = locate((1.0 - p1.b) * w0_1, wg.origin1, wg.dw1, wg.n1)?;
    let jj = locate((1.0 - p2.b) * w0_2, wg.origin2, wg.dw2, wg.n2)?;

    let cm = analyze_default(&f.modulate(w0_1, w0_2), window, p1, p2)?;
    let cf = analyze_default(f, window, p1, p2)?;
    let scale = cf.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }

    let e1 = w0_1 * (p1.b * p1.q - p1.d * p1.p) - p1.d * p1.b * w0_1 * w0_1 / 2.0
        + p1.d * w0_1 * w0_1;
    let e2 = w0_2 * (p2.b * p2.q - p2.d * p2.p) - p2.d * p2.b * w0_2 * w0_2 / 2.0
        + p2.d * w0_2 * w0_2;
    let li = Quaternion::exp_i(e1);
    let rj = Quaternion::exp_j(e2);

    let mut worst = 0.0_f64;
    for iu in 0..g.n1 {
        for ju in 0..g.n2 {
            let pred = li * cf.at(iu, ju, ii, jj) * rj;
            worst = worst.max((cm.at(iu, ju, i0, j0) - pred).norm());
        }
    }
    Ok(worst / scale)
}

/// Residual of the window-shift covariance: analyzing with g(·−k) equals the
/// g coefficients re-indexed to (u+k, w). Pure re-indexing of identical sums.
pub fn check_window_shift(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
    k1: f64,
    k2: f64,
) -> Result<f64, QolctError> {
    let g = f.grid;
    let s1 = lattice_steps(k1, g.dt1)?;
    let s2 = lattice_steps(k2, g.dt2)?;
    let shifted = WindowSpec::new(window.g.shift_steps(s1, s2))?;
    let ca = analyze_default(f, &shifted, p1, p2)?;
    let cb = analyze_default(f, window, p1, p2)?;
    let scale = cb.max_abs();
    if scale == 0.0 {
        return Ok(0.0);
    }
    let wlen = ca.wgrid.len();
    let mut worst = 0.0_f64;
    for i in 0..g.n1 {
        let Some(ii) = offset_index(i, s1, g.n1) else { continue };
        for j in 0..g.n2 {
            let Some(jj) = offset_index(j, s2, g.n2) else { continue };
            let a = ca.u_slice(i, j);
            let b = cb.u_slice(ii, jj);
            for m in 0..wlen {
                worst = worst.max((a[m] - b[m]).norm());
            }
        }
    }
    Ok(worst / scale)
}

/// Outcome of the reflection identity check: the best-fit global factor
/// between the two sides and the relative residual after applying it.
#[derive(Clone, Copy, Debug)]
pub struct ParityReport {
    pub factor: f64,
    pub residual: f64,
}

/// Reflection covariance: coefficients of f(−t) with window g against the
/// mirrored coefficients of f with window g(−t) under sign-flipped offsets.
/// Reports the best-fit scalar between the sides instead of asserting one.
pub fn check_parity(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<ParityReport, QolctError> {
    let fp = f.parity()?;
    let gp = window.g.parity()?;
    let q1 = OlctParams { p: -p1.p, q: -p1.q, ..*p1 };
    let q2 = OlctParams { p: -p2.p, q: -p2.q, ..*p2 };
    let cl = analyze_default(&fp, window, p1, p2)?;
    let cr = analyze_default(f, &WindowSpec::new(gp)?, &q1, &q2)?;

    // node 0 has no mirror image; compare on the mirror-complete block
    let g = f.grid;
    let (n1, n2) = (g.n1, g.n2);
    let (w1, w2) = (cl.wgrid.n1, cl.wgrid.n2);
    let mut num = 0.0;
    let mut den = 0.0;
    for_each_mirrored(n1, n2, w1, w2, |i, j, m1, m2| {
        let l = cl.at(i, j, m1, m2);
        let r = cr.at(n1 - i, n2 - j, w1 - m1, w2 - m2);
        num += l.dot(r);
        den += r.dot(r);
    });
    if den == 0.0 {
        return Ok(ParityReport { factor: 0.0, residual: 0.0 });
    }
    let factor = num / den;
    let mut dev = 0.0;
    let mut lsq = 0.0;
    for_each_mirrored(n1, n2, w1, w2, |i, j, m1, m2| {
        let l = cl.at(i, j, m1, m2);
        let r = cr.at(n1 - i, n2 - j, w1 - m1, w2 - m2);
        dev += (l - r.scale(factor)).norm_sqr();
        lsq += l.norm_sqr();
    });
    let residual = if lsq == 0.0 { 0.0 } else { (dev / lsq).sqrt() };
    Ok(ParityReport { factor, residual })
}

fn for_each_mirrored(
    n1: usize,
    n2: usize,
    w1: usize,
    w2: usize,
    mut visit: impl FnMut(usize, usize, usize, usize),
) {
    for i in 1..n1 {
        for j in 1..n2 {
            for m1 in 1..w1 {
                for m2 in 1..w2 {
                    visit(i, j, m1, m2);
                }
            }
        }
    }
}

/// Linearity residuals: real superposition in the signal, and anti-linearity
/// in the window for a constant from the commutant of the right kernel
/// (coefficients pick up conj(α) on the right). Returns the worse of the two.
pub fn check_linearity(
    fs: &[QField],
    alphas: &[f64],
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<f64, QolctError> {
    if fs.is_empty() {
        return Ok(0.0);
    }
    let mut combo = QField::zero(fs[0].grid);
    let mut acc = vec![Quaternion::ZERO; 0];
    let mut scale = 0.0_f64;
    for (field, &alpha) in fs.iter().zip(alphas) {
        combo = combo.add(&field.scale(alpha))?;
        let c = analyze_default(field, window, p1, p2)?;
        if acc.is_empty() {
            acc = vec![Quaternion::ZERO; c.samples.len()];
        }
        for (a, &s) in acc.iter_mut().zip(&c.samples) {
            *a += s.scale(alpha);
        }
        scale = scale.max(alpha.abs() * c.max_abs());
    }
    let ca = analyze_default(&combo, window, p1, p2)?;
    let mut superpose = 0.0_f64;
    for (&a, &b) in ca.samples.iter().zip(&acc) {
        superpose = superpose.max((a - b).norm());
    }
    let superpose = if scale == 0.0 { 0.0 } else { superpose / scale };

    // conj(α) must commute past the right kernel, so α lives in span{1, j}
    let alpha = Quaternion::new(0.6, 0.0, -0.8, 0.0);
    let scaled = WindowSpec::new(window.g.left_mul(alpha))?;
    let cg = analyze_default(&fs[0], window, p1, p2)?;
    let cag = analyze_default(&fs[0], &scaled, p1, p2)?;
    let wscale = cg.max_abs();
    let mut anti = 0.0_f64;
    for (&a, &b) in cag.samples.iter().zip(&cg.samples) {
        anti = anti.max((a - b * alpha.conj()).norm());
    }
    let anti = if wscale == 0.0 { 0.0 } else { anti / wscale };

    Ok(superpose.max(anti))
}

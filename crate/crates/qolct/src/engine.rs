//! Transform engine: a direct quadrature path valid on any frequency grid,
//! and an FFT-factored fast path tied to the aligned grid.
//!
//! Both paths walk the same two passes. The left pass applies the i-complex
//! kernel through the i-split, where a factor c acts as (c·f1, conj(c)·f2);
//! the right pass applies the j-complex kernel through the j-split, where it
//! acts componentwise. The fast path factors each pass into a pointwise
//! chirp, a DFT, and a pointwise post-chirp.

use crate::freq::FreqGrid;
use crate::kernel::{kernel_amp, kernel_phase};
use crate::params::OlctParams;
use crate::QolctError;
use num_complex::Complex64;
use quatfield::{pairwise_sum_by, ComplexPair, FieldError, GridSpec, QField, Quaternion};
use rustfft::{Fft, FftPlanner};
use std::f64::consts::FRAC_PI_4;
use std::sync::Arc;

/// Which path produced a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Direct,
    Fast,
}

/// Sampled spectrum on a frequency grid; samples are row-major over (m1, m2).
#[derive(Clone, Debug)]
pub struct QSpectrum {
    pub grid: FreqGrid,
    pub samples: Vec<Quaternion>,
    pub provenance: Provenance,
}

impl QSpectrum {
    pub fn zero(grid: FreqGrid, provenance: Provenance) -> QSpectrum {
        QSpectrum { grid, samples: vec![Quaternion::ZERO; grid.len()], provenance }
    }

    pub fn at(&self, m1: usize, m2: usize) -> Quaternion {
        self.samples[self.grid.index(m1, m2)]
    }

    pub fn norm_sqr(&self) -> f64 {
        let s = pairwise_sum_by(self.samples.len(), &mut |i| self.samples[i].norm_sqr());
        s * self.grid.cell()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Quadrature of self·conj(other) over the frequency grid.
    pub fn inner(&self, other: &QSpectrum) -> Result<Quaternion, QolctError> {
        if self.grid != other.grid {
            return Err(QolctError::TensorMismatch);
        }
        let s = pairwise_sum_by(self.samples.len(), &mut |i| {
            self.samples[i] * other.samples[i].conj()
        });
        Ok(s.scale(self.grid.cell()))
    }

    pub fn scale(&self, s: f64) -> QSpectrum {
        QSpectrum {
            grid: self.grid,
            samples: self.samples.iter().map(|q| q.scale(s)).collect(),
            provenance: self.provenance,
        }
    }

    pub fn add(&self, other: &QSpectrum) -> Result<QSpectrum, QolctError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &QSpectrum) -> Result<QSpectrum, QolctError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &QSpectrum,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> Result<QSpectrum, QolctError> {
        if self.grid != other.grid {
            return Err(QolctError::TensorMismatch);
        }
        let samples =
            self.samples.iter().zip(&other.samples).map(|(&a, &b)| f(a, b)).collect();
        Ok(QSpectrum { grid: self.grid, samples, provenance: self.provenance })
    }
}

fn split_i_parts(samples: &[Quaternion]) -> (Vec<Complex64>, Vec<Complex64>) {
    samples
        .iter()
        .map(|q| {
            let p = q.split_i();
            (p.f1, p.f2)
        })
        .unzip()
}

fn join_i_split_j(a: &[Complex64], b: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
    a.iter()
        .zip(b)
        .map(|(&f1, &f2)| Quaternion::from_split_i(ComplexPair { f1, f2 }).split_j())
        .unzip()
}

/// Forward kernel matrix [m·tn + k] = amp·e^{iθ(t_k, w_m)}·dt.
fn forward_matrix(
    par: &OlctParams,
    tn: usize,
    t_origin: f64,
    dt: f64,
    wn: usize,
    w_origin: f64,
    dw: f64,
) -> Vec<Complex64> {
    let amp = kernel_amp(par) * dt;
    let mut out = Vec::with_capacity(wn * tn);
    for m in 0..wn {
        let w = w_origin + m as f64 * dw;
        for k in 0..tn {
            let t = t_origin + k as f64 * dt;
            out.push(Complex64::from_polar(amp, kernel_phase(par, t, w)));
        }
    }
    out
}

/// Adjoint kernel matrix [k·wn + m] = amp·e^{−iθ(t_k, w_m)}·|dw|.
fn adjoint_matrix(
    par: &OlctParams,
    tn: usize,
    t_origin: f64,
    dt: f64,
    wn: usize,
    w_origin: f64,
    dw: f64,
) -> Vec<Complex64> {
    let amp = kernel_amp(par) * dw.abs();
    let mut out = Vec::with_capacity(tn * wn);
    for k in 0..tn {
        let t = t_origin + k as f64 * dt;
        for m in 0..wn {
            let w = w_origin + m as f64 * dw;
            out.push(Complex64::from_polar(amp, -kernel_phase(par, t, w)));
        }
    }
    out
}

/// Direct quadrature of the two-sided transform at every node of `wgrid`.
pub fn qolct_forward(
    f: &QField,
    p1: &OlctParams,
    p2: &OlctParams,
    wgrid: &FreqGrid,
) -> Result<QSpectrum, QolctError> {
    if p1.is_degenerate() || p2.is_degenerate() {
        return Err(QolctError::DegenerateB);
    }
    let g = f.grid;
    let m1 = forward_matrix(p1, g.n1, g.origin1, g.dt1, wgrid.n1, wgrid.origin1, wgrid.dw1);
    let m2 = forward_matrix(p2, g.n2, g.origin2, g.dt2, wgrid.n2, wgrid.origin2, wgrid.dw2);
    let (f1, f2) = split_i_parts(&f.samples);

    let zero = Complex64::new(0.0, 0.0);
    let mut h1 = vec![zero; wgrid.n1 * g.n2];
    let mut h2 = vec![zero; wgrid.n1 * g.n2];
    for m in 0..wgrid.n1 {
        let row = &m1[m * g.n1..(m + 1) * g.n1];
        for k2 in 0..g.n2 {
            h1[m * g.n2 + k2] =
                pairwise_sum_by(g.n1, &mut |k1| row[k1] * f1[k1 * g.n2 + k2]);
            h2[m * g.n2 + k2] =
                pairwise_sum_by(g.n1, &mut |k1| row[k1].conj() * f2[k1 * g.n2 + k2]);
        }
    }
    let (z1, z2) = join_i_split_j(&h1, &h2);

    let mut samples = Vec::with_capacity(wgrid.len());
    for mm1 in 0..wgrid.n1 {
        for mm2 in 0..wgrid.n2 {
            let row = &m2[mm2 * g.n2..(mm2 + 1) * g.n2];
            let s1 = pairwise_sum_by(g.n2, &mut |k2| z1[mm1 * g.n2 + k2] * row[k2]);
            let s2 = pairwise_sum_by(g.n2, &mut |k2| z2[mm1 * g.n2 + k2] * row[k2]);
            samples.push(Quaternion::from_split_j(s1, s2));
        }
    }
    Ok(QSpectrum { grid: *wgrid, samples, provenance: Provenance::Direct })
}

/// Adjoint of the forward quadrature; exact inverse on the aligned grid only.
pub fn qolct_inverse(
    s: &QSpectrum,
    p1: &OlctParams,
    p2: &OlctParams,
    tgrid: &GridSpec,
) -> Result<QField, QolctError> {
    if p1.is_degenerate() || p2.is_degenerate() {
        return Err(QolctError::DegenerateB);
    }
    let expect = FreqGrid::aligned(tgrid, p1, p2)?;
    if !s.grid.aligned || s.grid != expect {
        return Err(QolctError::UnalignedGrid);
    }
    let wg = s.grid;
    let a1 = adjoint_matrix(p1, tgrid.n1, tgrid.origin1, tgrid.dt1, wg.n1, wg.origin1, wg.dw1);
    let a2 = adjoint_matrix(p2, tgrid.n2, tgrid.origin2, tgrid.dt2, wg.n2, wg.origin2, wg.dw2);
    let (s1, s2) = split_i_parts(&s.samples);

    let zero = Complex64::new(0.0, 0.0);
    let mut h1 = vec![zero; tgrid.n1 * wg.n2];
    let mut h2 = vec![zero; tgrid.n1 * wg.n2];
    for k1 in 0..tgrid.n1 {
        let row = &a1[k1 * wg.n1..(k1 + 1) * wg.n1];
        for m2 in 0..wg.n2 {
            h1[k1 * wg.n2 + m2] =
                pairwise_sum_by(wg.n1, &mut |m| row[m] * s1[m * wg.n2 + m2]);
            h2[k1 * wg.n2 + m2] =
                pairwise_sum_by(wg.n1, &mut |m| row[m].conj() * s2[m * wg.n2 + m2]);
        }
    }
    let (z1, z2) = join_i_split_j(&h1, &h2);

    let mut samples = Vec::with_capacity(tgrid.len());
    for k1 in 0..tgrid.n1 {
        for k2 in 0..tgrid.n2 {
            let row = &a2[k2 * wg.n2..(k2 + 1) * wg.n2];
            let v1 = pairwise_sum_by(wg.n2, &mut |m| z1[k1 * wg.n2 + m] * row[m]);
            let v2 = pairwise_sum_by(wg.n2, &mut |m| z2[k1 * wg.n2 + m] * row[m]);
            samples.push(Quaternion::from_split_j(v1, v2));
        }
    }
    Ok(QField { grid: *tgrid, samples })
}

/// Reusable FFT factorization of the transform on one (time grid, parameter
/// pair). Forward and inverse share the chirp tables; plans are cheap to
/// clone and safe to use from several threads.
pub struct QolctPlan {
    tgrid: GridSpec,
    wgrid: FreqGrid,
    fft1: Arc<dyn Fft<f64>>,
    ifft1: Arc<dyn Fft<f64>>,
    fft2: Arc<dyn Fft<f64>>,
    ifft2: Arc<dyn Fft<f64>>,
    pre1: Vec<Complex64>,
    post1: Vec<Complex64>,
    pre2: Vec<Complex64>,
    post2: Vec<Complex64>,
}

/// Pre-chirp e^{i·a·t_k²/(2b)}·(−1)^k; the alternating sign centers the DFT.
fn pre_chirp(par: &OlctParams, n: usize, origin: f64, dt: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let t = origin + k as f64 * dt;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::from_polar(sign, par.a * t * t / (2.0 * par.b))
        })
        .collect()
}

/// Post-chirp amp·dt·e^{iμ(w_m)}·e^{−i·o·(w_m−p)/b} with μ the t-independent
/// part of the kernel phase.
fn post_chirp(
    par: &OlctParams,
    n: usize,
    w_origin: f64,
    dw: f64,
    t_origin: f64,
    dt: f64,
) -> Vec<Complex64> {
    let amp = kernel_amp(par) * dt;
    (0..n)
        .map(|m| {
            let w = w_origin + m as f64 * dw;
            let mu = (-2.0 * w * (par.d * par.p - par.b * par.q)
                + par.d * (w * w + par.p * par.p))
                / (2.0 * par.b)
                - FRAC_PI_4;
            Complex64::from_polar(amp, mu - t_origin * (w - par.p) / par.b)
        })
        .collect()
}

impl QolctPlan {
    pub fn new(grid: GridSpec, p1: OlctParams, p2: OlctParams) -> Result<QolctPlan, QolctError> {
        let wgrid = FreqGrid::aligned(&grid, &p1, &p2)?;
        let mut planner = FftPlanner::new();
        Ok(QolctPlan {
            tgrid: grid,
            wgrid,
            fft1: planner.plan_fft_forward(grid.n1),
            ifft1: planner.plan_fft_inverse(grid.n1),
            fft2: planner.plan_fft_forward(grid.n2),
            ifft2: planner.plan_fft_inverse(grid.n2),
            pre1: pre_chirp(&p1, grid.n1, grid.origin1, grid.dt1),
            post1: post_chirp(&p1, grid.n1, wgrid.origin1, wgrid.dw1, grid.origin1, grid.dt1),
            pre2: pre_chirp(&p2, grid.n2, grid.origin2, grid.dt2),
            post2: post_chirp(&p2, grid.n2, wgrid.origin2, wgrid.dw2, grid.origin2, grid.dt2),
        })
    }

    pub fn tgrid(&self) -> GridSpec {
        self.tgrid
    }

    pub fn wgrid(&self) -> FreqGrid {
        self.wgrid
    }

    pub fn forward(&self, f: &QField) -> Result<QSpectrum, QolctError> {
        if f.grid != self.tgrid {
            return Err(QolctError::Field(FieldError::GridMismatch));
        }
        let (mut f1, mut f2) = split_i_parts(&f.samples);
        // the conjugated kernel acting on the second split component is the
        // plain pass wrapped in conjugations
        for v in &mut f2 {
            *v = v.conj();
        }
        self.pass_axis1(&mut f1);
        self.pass_axis1(&mut f2);
        for v in &mut f2 {
            *v = v.conj();
        }
        let (mut z1, mut z2) = join_i_split_j(&f1, &f2);
        self.pass_axis2(&mut z1);
        self.pass_axis2(&mut z2);
        let samples = z1
            .iter()
            .zip(&z2)
            .map(|(&a, &b)| Quaternion::from_split_j(a, b))
            .collect();
        Ok(QSpectrum { grid: self.wgrid, samples, provenance: Provenance::Fast })
    }

    pub fn inverse(&self, s: &QSpectrum) -> Result<QField, QolctError> {
        if s.grid != self.wgrid {
            return Err(QolctError::UnalignedGrid);
        }
        let (mut s1, mut s2) = split_i_parts(&s.samples);
        for v in &mut s2 {
            *v = v.conj();
        }
        self.inv_axis1(&mut s1);
        self.inv_axis1(&mut s2);
        for v in &mut s2 {
            *v = v.conj();
        }
        let (mut z1, mut z2) = join_i_split_j(&s1, &s2);
        self.inv_axis2(&mut z1);
        self.inv_axis2(&mut z2);
        let samples = z1
            .iter()
            .zip(&z2)
            .map(|(&a, &b)| Quaternion::from_split_j(a, b))
            .collect();
        Ok(QField { grid: self.tgrid, samples })
    }

    fn pass_axis1(&self, x: &mut [Complex64]) {
        let (n1, n2) = (self.tgrid.n1, self.tgrid.n2);
        let zero = Complex64::new(0.0, 0.0);
        let mut col = vec![zero; n1];
        let mut scratch = vec![zero; self.fft1.get_inplace_scratch_len()];
        for k2 in 0..n2 {
            for k1 in 0..n1 {
                col[k1] = self.pre1[k1] * x[k1 * n2 + k2];
            }
            self.fft1.process_with_scratch(&mut col, &mut scratch);
            for m1 in 0..n1 {
                x[m1 * n2 + k2] = self.post1[m1] * col[m1];
            }
        }
    }

    fn pass_axis2(&self, x: &mut [Complex64]) {
        let (n1, n2) = (self.tgrid.n1, self.tgrid.n2);
        let zero = Complex64::new(0.0, 0.0);
        let mut scratch = vec![zero; self.fft2.get_inplace_scratch_len()];
        for m1 in 0..n1 {
            let row = &mut x[m1 * n2..(m1 + 1) * n2];
            for (k2, v) in row.iter_mut().enumerate() {
                *v *= self.pre2[k2];
            }
            self.fft2.process_with_scratch(row, &mut scratch);
            for (m2, v) in row.iter_mut().enumerate() {
                *v *= self.post2[m2];
            }
        }
    }

    // inverse passes: y_k = (|dw|/dt)·conj(pre_k)·Σ_m e^{+2πikm/n}·conj(post_m)·x_m

    fn inv_axis1(&self, x: &mut [Complex64]) {
        let (n1, n2) = (self.tgrid.n1, self.tgrid.n2);
        let scale = self.wgrid.dw1.abs() / self.tgrid.dt1;
        let zero = Complex64::new(0.0, 0.0);
        let mut col = vec![zero; n1];
        let mut scratch = vec![zero; self.ifft1.get_inplace_scratch_len()];
        for m2 in 0..n2 {
            for m1 in 0..n1 {
                col[m1] = self.post1[m1].conj() * x[m1 * n2 + m2];
            }
            self.ifft1.process_with_scratch(&mut col, &mut scratch);
            for k1 in 0..n1 {
                x[k1 * n2 + m2] = self.pre1[k1].conj() * col[k1] * scale;
            }
        }
    }

    fn inv_axis2(&self, x: &mut [Complex64]) {
        let (n1, n2) = (self.tgrid.n1, self.tgrid.n2);
        let scale = self.wgrid.dw2.abs() / self.tgrid.dt2;
        let zero = Complex64::new(0.0, 0.0);
        let mut scratch = vec![zero; self.ifft2.get_inplace_scratch_len()];
        for k1 in 0..n1 {
            let row = &mut x[k1 * n2..(k1 + 1) * n2];
            for (m2, v) in row.iter_mut().enumerate() {
                *v = self.post2[m2].conj() * *v;
            }
            self.ifft2.process_with_scratch(row, &mut scratch);
            for (k2, v) in row.iter_mut().enumerate() {
                *v = self.pre2[k2].conj() * *v * scale;
            }
        }
    }
}

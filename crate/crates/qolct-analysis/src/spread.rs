//! Second moments of signals and of windowed coefficient tensors.

use crate::AnalysisError;
use qolct::{analyze_map_u, CoeffTensor, FreqGrid, OlctParams, WindowSpec};
use quatfield::{pairwise_sum, pairwise_sum_by, QField};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    First,
    Second,
}

/// Σ t_k²·|f|²·dt, the raw second moment about the origin.
pub fn spatial_spread(f: &QField, axis: Axis) -> f64 {
    let grid = f.grid;
    let s: f64 = pairwise_sum_by(grid.len(), &mut |idx| {
        let t = match axis {
            Axis::First => grid.t1(idx / grid.n2),
            Axis::Second => grid.t2(idx % grid.n2),
        };
        t * t * f.samples[idx].norm_sqr()
    });
    s * grid.cell()
}

/// Second moment about the signal's own centroid along the axis; zero for
/// the zero field.
pub fn spatial_spread_centered(f: &QField, axis: Axis) -> f64 {
    let grid = f.grid;
    let coord = |idx: usize| match axis {
        Axis::First => grid.t1(idx / grid.n2),
        Axis::Second => grid.t2(idx % grid.n2),
    };
    let mass: f64 = pairwise_sum_by(grid.len(), &mut |idx| f.samples[idx].norm_sqr());
    if mass == 0.0 {
        return 0.0;
    }
    let first: f64 =
        pairwise_sum_by(grid.len(), &mut |idx| coord(idx) * f.samples[idx].norm_sqr());
    let center = first / mass;
    let s: f64 = pairwise_sum_by(grid.len(), &mut |idx| {
        let d = coord(idx) - center;
        d * d * f.samples[idx].norm_sqr()
    });
    s * grid.cell()
}

fn freq_coord(wgrid: &FreqGrid, axis: Axis, i: usize) -> f64 {
    match axis {
        Axis::First => wgrid.w1(i / wgrid.n2),
        Axis::Second => wgrid.w2(i % wgrid.n2),
    }
}

/// Reduce weight(i)·|C|² per u slice and then across slices; the same tree
/// the streaming path uses, so either route gives the same bits.
fn weighted_raw(c: &CoeffTensor, weight: &mut dyn FnMut(usize) -> f64) -> f64 {
    let wlen = c.wgrid.len();
    pairwise_sum_by(c.ugrid.len(), &mut |iu| {
        let base = iu * wlen;
        pairwise_sum_by(wlen, &mut |i| weight(i) * c.samples[base + i].norm_sqr())
    })
}

/// ∬ ξ_k²·|C|² du dξ.
pub fn spectral_spread(c: &CoeffTensor, axis: Axis) -> f64 {
    weighted_raw(c, &mut |i| {
        let w = freq_coord(&c.wgrid, axis, i);
        w * w
    }) * c.cell()
}

/// Frequency second moment about the tensor's own ξ_k centroid.
pub fn spectral_spread_centered(c: &CoeffTensor, axis: Axis) -> f64 {
    let mass = weighted_raw(c, &mut |_| 1.0);
    if mass == 0.0 {
        return 0.0;
    }
    let first = weighted_raw(c, &mut |i| freq_coord(&c.wgrid, axis, i));
    let center = first / mass;
    weighted_raw(c, &mut |i| {
        let d = freq_coord(&c.wgrid, axis, i) - center;
        d * d
    }) * c.cell()
}

/// Streaming summary of the coefficient tensor on the aligned grid.
#[derive(Clone, Copy, Debug)]
pub struct SpreadProfile {
    pub energy: f64,
    pub spread1: f64,
    pub spread2: f64,
    pub sup: f64,
}

/// One pass over the analysis slices, reduced exactly as the materialized
/// tensor would be: energy, both frequency spreads, and max |C|.
pub fn coefficient_profile(
    f: &QField,
    window: &WindowSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<SpreadProfile, AnalysisError> {
    let wgrid = FreqGrid::aligned(&f.grid, p1, p2)?;
    let wlen = wgrid.len();
    let w1sq: Vec<f64> = (0..wlen)
        .map(|i| {
            let w = wgrid.w1(i / wgrid.n2);
            w * w
        })
        .collect();
    let w2sq: Vec<f64> = (0..wlen)
        .map(|i| {
            let w = wgrid.w2(i % wgrid.n2);
            w * w
        })
        .collect();
    let ulen = f.grid.len();
    let mut e = Vec::with_capacity(ulen);
    let mut s1 = Vec::with_capacity(ulen);
    let mut s2 = Vec::with_capacity(ulen);
    let mut sup = 0.0f64;
    analyze_map_u(f, window, p1, p2, &mut |_, _, spec| {
        e.push(pairwise_sum_by(wlen, &mut |i| spec.samples[i].norm_sqr()));
        s1.push(pairwise_sum_by(wlen, &mut |i| w1sq[i] * spec.samples[i].norm_sqr()));
        s2.push(pairwise_sum_by(wlen, &mut |i| w2sq[i] * spec.samples[i].norm_sqr()));
        sup = spec.samples.iter().map(|q| q.norm()).fold(sup, f64::max);
    })?;
    let cell = f.grid.cell() * wgrid.cell();
    Ok(SpreadProfile {
        energy: pairwise_sum(&e) * cell,
        spread1: pairwise_sum(&s1) * cell,
        spread2: pairwise_sum(&s2) * cell,
        sup,
    })
}

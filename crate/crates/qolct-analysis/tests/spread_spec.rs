//! Spread measures checked against independent summation oracles.

use qolct::{analyze_default, CoeffTensor, FreqGrid, OlctParams, WindowSpec};
use qolct_analysis::{
    coefficient_profile, spatial_spread, spatial_spread_centered, spectral_spread,
    spectral_spread_centered, Axis,
};
use quatfield::{synth, GridSpec, QField, Quaternion};

fn fourier_pair() -> (OlctParams, OlctParams) {
    (OlctParams::fourier(), OlctParams::fourier())
}

#[test]
fn spectral_spread_matches_independent_double_sum() {
    let grid = GridSpec::square(8, 0.5);
    let f = synth::gaussian(grid, 0.9, 1.1, Quaternion::new(0.7, -0.3, 0.2, 0.1));
    let g = WindowSpec::new(synth::gaussian(grid, 0.8, 0.8, Quaternion::ONE)).unwrap();
    let (p1, p2) = fourier_pair();
    let c = analyze_default(&f, &g, &p1, &p2).unwrap();

    // plain nested loops, sharing no reduction code with the library
    let mut brute1 = 0.0;
    let mut brute2 = 0.0;
    for iu1 in 0..grid.n1 {
        for iu2 in 0..grid.n2 {
            for m1 in 0..c.wgrid.n1 {
                for m2 in 0..c.wgrid.n2 {
                    let mag = c.at(iu1, iu2, m1, m2).norm_sqr();
                    brute1 += c.wgrid.w1(m1).powi(2) * mag;
                    brute2 += c.wgrid.w2(m2).powi(2) * mag;
                }
            }
        }
    }
    brute1 *= grid.cell() * c.wgrid.cell();
    brute2 *= grid.cell() * c.wgrid.cell();

    let s1 = spectral_spread(&c, Axis::First);
    let s2 = spectral_spread(&c, Axis::Second);
    assert!((s1 - brute1).abs() <= 1e-12 * brute1, "axis 1: {s1} vs {brute1}");
    assert!((s2 - brute2).abs() <= 1e-12 * brute2, "axis 2: {s2} vs {brute2}");
}

#[test]
fn spatial_spread_of_unit_gaussian_is_half() {
    let grid = GridSpec::square(64, 0.25);
    let f = synth::normalized_gaussian(grid, 1.0, 1.0);
    for axis in [Axis::First, Axis::Second] {
        let s = spatial_spread(&f, axis);
        assert!((s - 0.5).abs() < 1e-6, "{axis:?}: {s}");
    }
}

#[test]
fn spatial_spread_vanishes_at_the_origin_sample() {
    let grid = GridSpec::square(16, 0.5);
    let f = QField::one_hot(grid, 8, 8, Quaternion::new(0.3, 0.4, -0.1, 0.9));
    assert_eq!(spatial_spread(&f, Axis::First), 0.0);
    assert_eq!(spatial_spread(&f, Axis::Second), 0.0);
}

#[test]
fn spatial_spread_tracks_shifts_by_moment_arithmetic() {
    let grid = GridSpec::square(32, 0.5);
    let f = synth::gaussian(grid, 0.8, 1.0, Quaternion::new(0.6, -0.2, 0.3, 0.5));
    let shifted = f.shift_steps(2, -3);

    // Σ (t+s)²|f|² = Σ t²|f|² + 2s·Σ t|f|² + s²·Σ |f|², computed directly
    for (axis, s) in [(Axis::First, 2.0 * grid.dt1), (Axis::Second, -3.0 * grid.dt2)] {
        let mut first = 0.0;
        for k1 in 0..grid.n1 {
            for k2 in 0..grid.n2 {
                let t = match axis {
                    Axis::First => grid.t1(k1),
                    Axis::Second => grid.t2(k2),
                };
                first += t * f.samples[grid.index(k1, k2)].norm_sqr();
            }
        }
        first *= grid.cell();
        let expect = spatial_spread(&f, axis) + 2.0 * s * first + s * s * f.norm_sqr();
        let got = spatial_spread(&shifted, axis);
        assert!((got - expect).abs() <= 1e-9 * expect.abs(), "{axis:?}: {got} vs {expect}");
    }
}

#[test]
fn centered_spread_ignores_grid_aligned_shifts() {
    let grid = GridSpec::square(32, 0.5);
    let f = synth::gaussian(grid, 0.8, 0.9, Quaternion::new(0.6, -0.2, 0.3, 0.5));
    let shifted = f.shift_steps(3, -2);
    for axis in [Axis::First, Axis::Second] {
        let base = spatial_spread_centered(&f, axis);
        let moved = spatial_spread_centered(&shifted, axis);
        assert!((base - moved).abs() <= 1e-9 * base, "{axis:?}: {base} vs {moved}");
    }
    assert_eq!(spatial_spread_centered(&QField::zero(grid), Axis::First), 0.0);
}

#[test]
fn zero_tensor_has_zero_spectral_spread() {
    let grid = GridSpec::square(8, 0.5);
    let (p1, p2) = fourier_pair();
    let wgrid = FreqGrid::aligned(&grid, &p1, &p2).unwrap();
    let c = CoeffTensor::zero(grid, wgrid);
    assert_eq!(spectral_spread(&c, Axis::First), 0.0);
    assert_eq!(spectral_spread(&c, Axis::Second), 0.0);
}

#[test]
fn energy_on_the_zero_frequency_plane_contributes_nothing() {
    let grid = GridSpec::square(16, 0.5);
    let (p1, p2) = fourier_pair();
    let wgrid = FreqGrid::aligned(&grid, &p1, &p2).unwrap();
    let mut c = CoeffTensor::zero(grid, wgrid);
    // w1 = 0 exactly at m1 = n/2 since p1 = 0
    for iu in [0usize, 37, 100] {
        let base = iu * wgrid.len();
        for m2 in [0usize, 5, 11] {
            c.samples[base + wgrid.index(8, m2)] = Quaternion::new(1.0, -0.5, 0.2, 0.8);
        }
    }
    assert_eq!(spectral_spread(&c, Axis::First), 0.0);
    assert!(spectral_spread(&c, Axis::Second) > 0.0);
}

#[test]
fn streaming_profile_matches_tensor_reductions_bitwise() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 71);
    let g = WindowSpec::new(synth::gaussian(grid, 0.8, 0.7, Quaternion::new(0.8, 0.1, -0.3, 0.2)))
        .unwrap();
    let p1 = OlctParams::new(1.0, 2.0, 1.0, 3.0, 0.5, -0.7).unwrap();
    let p2 = OlctParams::new(2.0, 1.0, 1.0, 1.0, 0.3, 0.4).unwrap();
    let c = analyze_default(&f, &g, &p1, &p2).unwrap();
    let profile = coefficient_profile(&f, &g, &p1, &p2).unwrap();
    assert_eq!(profile.energy, c.energy());
    assert_eq!(profile.spread1, spectral_spread(&c, Axis::First));
    assert_eq!(profile.spread2, spectral_spread(&c, Axis::Second));
    assert_eq!(profile.sup, c.max_abs());
}

#[test]
fn centered_spectral_spread_is_shift_stable() {
    let grid = GridSpec::square(32, 0.5);
    // a = 0 on both axes, so a time shift of f moves |C| in u alone
    let p1 = OlctParams::new(0.0, 1.0, -1.0, 0.0, 0.3, -0.2).unwrap();
    let p2 = OlctParams::new(0.0, 1.0, -1.0, 0.0, -0.1, 0.5).unwrap();
    let f = synth::gaussian(grid, 0.9, 0.8, Quaternion::new(0.6, -0.2, 0.3, 0.5));
    let g = WindowSpec::new(synth::gaussian(grid, 0.8, 0.8, Quaternion::ONE)).unwrap();
    let c0 = analyze_default(&f, &g, &p1, &p2).unwrap();
    let c1 = analyze_default(&f.shift_steps(2, -1), &g, &p1, &p2).unwrap();
    for axis in [Axis::First, Axis::Second] {
        let base = spectral_spread_centered(&c0, axis);
        let moved = spectral_spread_centered(&c1, axis);
        assert!((base - moved).abs() <= 1e-9 * base, "{axis:?}: {base} vs {moved}");
    }
}

//! Closed-form reference signals: chirp Gaussians, the rectangular window,
//! and the windowed-coefficient closed form checked against the engine.

use num_complex::Complex64;
use qolct::{OlctParams, QolctPlan};
use qolct_analysis::{
    chirp_rect_axis_factor, chirp_rect_axis_limit, chirp_rect_coefficient,
    kernel_cancelling_chirp, make_gaussian, make_rect_window, AnalysisError, GaussianSpec,
    RectWindowSpec,
};
use quatfield::{GridSpec, Quaternion};
use std::f64::consts::PI;

fn worked_params() -> (OlctParams, OlctParams) {
    (
        OlctParams::new(1.0, 1.0, 1.0, 2.0, 0.3, -0.2).unwrap(),
        OlctParams::new(2.0, 1.0, 3.0, 2.0, 0.0, 0.5).unwrap(),
    )
}

fn beta() -> Quaternion {
    Quaternion::new(0.3, -0.7, 0.2, 0.4)
}

#[test]
fn chirp_gaussian_keeps_unit_magnitude() {
    let (p1, p2) = worked_params();
    let spec = kernel_cancelling_chirp(&p1, &p2, beta());
    assert!(!spec.is_decaying());
    let f = make_gaussian(&spec, GridSpec::square(16, 0.5));
    let expect = beta().norm();
    for q in &f.samples {
        assert!((q.norm() - expect).abs() <= 1e-12 * expect);
    }
}

#[test]
fn decaying_flag_follows_the_real_parts() {
    let decaying = GaussianSpec {
        alpha1: Complex64::new(0.5, 0.3),
        alpha2: Complex64::new(0.4, -0.2),
        beta: Quaternion::ONE,
    };
    assert!(decaying.is_decaying());
    let sideways = GaussianSpec { alpha1: Complex64::new(0.0, 0.3), ..decaying };
    assert!(!sideways.is_decaying());
}

#[test]
fn gaussian_samples_expand_as_left_i_right_j_product() {
    let spec = GaussianSpec {
        alpha1: Complex64::new(0.4, 0.2),
        alpha2: Complex64::new(0.3, -0.1),
        beta: Quaternion::ONE,
    };
    let grid = GridSpec::square(8, 0.5);
    let f = make_gaussian(&spec, grid);
    for (k1, k2) in [(0, 0), (3, 5), (6, 2)] {
        let t1 = grid.t1(k1);
        let t2 = grid.t2(k2);
        let e1 = (-spec.alpha1 * t1 * t1).exp();
        let e2 = (-spec.alpha2 * t2 * t2).exp();
        // (e1.re + e1.im·i)·(e2.re + e2.im·j) expanded by hand
        let expect = Quaternion::new(
            e1.re * e2.re,
            e1.im * e2.re,
            e1.re * e2.im,
            e1.im * e2.im,
        );
        let got = f.samples[grid.index(k1, k2)];
        assert!((got - expect).norm() <= 1e-15);
    }
}

#[test]
fn real_exponents_give_real_multiples_of_beta() {
    let spec = GaussianSpec {
        alpha1: Complex64::new(0.7, 0.0),
        alpha2: Complex64::new(0.2, 0.0),
        beta: beta(),
    };
    let grid = GridSpec::square(8, 0.5);
    let f = make_gaussian(&spec, grid);
    for (k1, k2) in [(1, 1), (4, 4), (2, 6)] {
        let t1 = grid.t1(k1);
        let t2 = grid.t2(k2);
        let r = (-0.7 * t1 * t1 - 0.2 * t2 * t2).exp();
        let got = f.samples[grid.index(k1, k2)];
        assert!((got - beta().scale(r)).norm() <= 1e-15);
    }
}

#[test]
fn rect_window_fills_the_expected_block() {
    let grid = GridSpec::square(64, 0.25);
    let g = make_rect_window(&RectWindowSpec { a: 4.0 * grid.dt1 }, grid).unwrap();
    let ones = g.samples.iter().filter(|q| **q == Quaternion::ONE).count();
    let zeros = g.samples.iter().filter(|q| **q == Quaternion::ZERO).count();
    assert_eq!(ones, 49, "open square excludes the boundary samples");
    assert_eq!(ones + zeros, grid.len());
    assert_eq!(g.norm_sqr(), 49.0 * grid.cell());

    let all = make_rect_window(&RectWindowSpec { a: 1000.0 * grid.dt1 }, grid).unwrap();
    assert!(all.samples.iter().all(|q| *q == Quaternion::ONE));
}

#[test]
fn rect_window_half_width_must_sit_on_the_lattice() {
    let grid = GridSpec::square(16, 0.5);
    for a in [0.3 * grid.dt1, -1.0, 0.0] {
        let err = make_rect_window(&RectWindowSpec { a }, grid).unwrap_err();
        assert_eq!(err, AnalysisError::OffGridHalfWidth);
    }
    // mismatched axes: on-lattice for dt1 but not dt2
    let uneven = GridSpec::centered(8, 8, 0.25, 0.2);
    assert!(make_rect_window(&RectWindowSpec { a: 1.0 }, uneven).is_ok());
    assert_eq!(
        make_rect_window(&RectWindowSpec { a: 0.75 }, uneven).unwrap_err(),
        AnalysisError::OffGridHalfWidth
    );
}

#[test]
fn coefficient_magnitude_factorizes_into_sinc_lobes() {
    let (p1, p2) = worked_params();
    let a = 2.0;
    for (u1, u2, d1, d2) in [(0.6, -1.1, 1.3, -0.7), (-2.0, 0.4, 0.45, 2.6)] {
        let w1 = p1.p + d1;
        let w2 = p2.p + d2;
        let q = chirp_rect_coefficient(u1, u2, w1, w2, &p1, &p2, a, beta()).unwrap();
        let lobe1 = (2.0 * (d1 * a / p1.b).sin() / d1).abs();
        let lobe2 = (2.0 * (d2 * a / p2.b).sin() / d2).abs();
        let expect = (p1.b * p2.b).sqrt() / (2.0 * PI) * lobe1 * beta().norm() * lobe2;
        assert!((q.norm() - expect).abs() <= 1e-12 * expect, "{} vs {expect}", q.norm());
    }
}

#[test]
fn coefficient_magnitude_is_independent_of_u() {
    let (p1, p2) = worked_params();
    let a = 2.0;
    let w = (p1.p + 0.9, p2.p - 1.7);
    let base = chirp_rect_coefficient(0.0, 0.0, w.0, w.1, &p1, &p2, a, beta())
        .unwrap()
        .norm();
    for (u1, u2) in [(1.0, -0.5), (2.25, 3.0), (-4.0, 0.125)] {
        let q = chirp_rect_coefficient(u1, u2, w.0, w.1, &p1, &p2, a, beta()).unwrap();
        assert!((q.norm() - base).abs() <= 1e-12 * base);
    }
}

#[test]
fn axis_factor_reaches_its_limit_at_the_offset_frequency() {
    // q = 0 keeps the phase stationary at w = p, so the quotient convergence
    // rate is O(Δ²) and ±1e-4 probes land within 1e-6 of the limit
    let par = OlctParams::new(1.0, 1.0, 1.0, 2.0, 0.3, 0.0).unwrap();
    let a = 2.0;
    let lim = chirp_rect_axis_limit(&par, a);
    for w in [par.p + 1e-4, par.p - 1e-4] {
        let got = chirp_rect_axis_factor(&par, w, 0.0, a).unwrap();
        assert!((got - lim).norm() <= 1e-6 * lim.norm(), "{got} vs {lim}");
    }
    assert_eq!(
        chirp_rect_axis_factor(&par, par.p, 0.0, a).unwrap_err(),
        AnalysisError::RemovableSingularity
    );
    assert_eq!(
        chirp_rect_axis_factor(&par, par.p + 1e-10, 0.0, a).unwrap_err(),
        AnalysisError::RemovableSingularity
    );
}

#[test]
fn zero_amplitude_gives_zero_coefficients() {
    let (p1, p2) = worked_params();
    let q = chirp_rect_coefficient(0.5, -0.25, 1.9, 2.2, &p1, &p2, 2.0, Quaternion::ZERO)
        .unwrap();
    assert_eq!(q, Quaternion::ZERO);
}

/// The engine against per-axis geometric sums written out by hand: transform
/// of (chirp Gaussian)·(shifted rect window) collapses to
/// amp·dt·e^{iμ(w)}·Σ_{|t−u|<a} e^{−i t (w−p)/b} per axis.
#[test]
fn engine_matches_windowed_geometric_sums() {
    let grid = GridSpec::square(64, 0.25);
    let (p1, p2) = worked_params();
    let a = 8.0 * grid.dt1;
    let f = make_gaussian(&kernel_cancelling_chirp(&p1, &p2, beta()), grid);
    let window = make_rect_window(&RectWindowSpec { a }, grid).unwrap();
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let wgrid = plan.wgrid();

    let axis_sum = |par: &OlctParams, w: f64, u: f64, dt: f64, nodes: &dyn Fn(usize) -> f64, n: usize| {
        let mu = (-2.0 * w * (par.d * par.p - par.b * par.q) + par.d * (w * w + par.p * par.p))
            / (2.0 * par.b)
            - PI / 4.0;
        let amp = 1.0 / (2.0 * PI * par.b).sqrt();
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let t = nodes(k);
            if (t - u).abs() < a - 1e-12 {
                s += Complex64::new(0.0, -t * (w - par.p) / par.b).exp();
            }
        }
        amp * dt * Complex64::new(0.0, mu).exp() * s
    };

    for (u1, u2) in [(0.0, 0.0), (1.0, -0.5)] {
        let shifted = window.shift(u1, u2).unwrap();
        let windowed = f.mul_pointwise(&shifted.conj()).unwrap();
        let spec = plan.forward(&windowed).unwrap();
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for m1 in (0..wgrid.n1).step_by(7) {
            for m2 in (0..wgrid.n2).step_by(5) {
                let s1 = axis_sum(&p1, wgrid.w1(m1), u1, grid.dt1, &|k| grid.t1(k), grid.n1);
                let s2 = axis_sum(&p2, wgrid.w2(m2), u2, grid.dt2, &|k| grid.t2(k), grid.n2);
                let expect = Quaternion::from_c_i(s1) * beta() * Quaternion::from_c_j(s2);
                let got = spec.samples[wgrid.index(m1, m2)];
                worst = worst.max((got - expect).norm());
                scale = scale.max(expect.norm());
            }
        }
        assert!(worst <= 1e-12 * scale, "u = ({u1}, {u2}): {worst} vs scale {scale}");
    }
}

/// Continuous closed form against the engine on the interior frequency band.
/// The discrete geometric sums above pin the engine to machine precision;
/// this comparison asks the continuous-integral formula to agree to 1e-3 and
/// records how far the two quadrature readings actually sit apart.
#[test]
fn closed_form_matches_engine_quadrature_on_the_band() {
    let grid = GridSpec::square(64, 0.25);
    let (p1, p2) = worked_params();
    let a = 8.0 * grid.dt1;
    let f = make_gaussian(&kernel_cancelling_chirp(&p1, &p2, beta()), grid);
    let window = make_rect_window(&RectWindowSpec { a }, grid).unwrap();
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let wgrid = plan.wgrid();

    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for (u1, u2) in [(0.0, 0.0), (1.0, -0.5)] {
        let shifted = window.shift(u1, u2).unwrap();
        let windowed = f.mul_pointwise(&shifted.conj()).unwrap();
        let spec = plan.forward(&windowed).unwrap();
        for m1 in 0..wgrid.n1 {
            for m2 in 0..wgrid.n2 {
                // keep more than one grid step away from the removable point
                if m1.abs_diff(wgrid.n1 / 2) < 2 || m2.abs_diff(wgrid.n2 / 2) < 2 {
                    continue;
                }
                let closed = chirp_rect_coefficient(
                    u1, u2, wgrid.w1(m1), wgrid.w2(m2), &p1, &p2, a, beta(),
                )
                .unwrap();
                let got = spec.samples[wgrid.index(m1, m2)];
                worst = worst.max((got - closed).norm());
                scale = scale.max(closed.norm());
            }
        }
    }
    let rel = worst / scale;
    assert!(
        rel <= 1e-3,
        "closed form sits {rel:.3e} from the engine in band-relative sup norm; \
         the engine itself matches the discrete geometric-sum evaluation of the \
         same integral to ~5e-15 (see engine_matches_windowed_geometric_sums), \
         so the continuous formula disagrees with the quadrature reading"
    );
}

use qolct::{chirp_factor, kernel_left, kernel_phase, kernel_right, OlctParams, QolctError, SplitUnit};
use quatfield::Quaternion;
use std::f64::consts::{FRAC_PI_4, PI};

fn par(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> OlctParams {
    OlctParams::new(a, b, c, d, p, q).unwrap()
}

#[test]
fn fourier_kernel_at_origin() {
    // a=d=0, b=1, t=w=0 kills every phase term except the constant −π/4
    let f = OlctParams::fourier();
    let k = kernel_left(&f, 0.0, 0.0).unwrap();
    let expect = Quaternion::exp_i(-FRAC_PI_4).scale(1.0 / (2.0 * PI).sqrt());
    assert!((k - expect).norm() < 1e-15);
    let kr = kernel_right(&f, 0.0, 0.0).unwrap();
    assert!((kr - Quaternion::exp_j(-FRAC_PI_4).scale(1.0 / (2.0 * PI).sqrt())).norm() < 1e-15);
}

#[test]
fn kernel_magnitude_depends_only_on_b() {
    for (pr, t, w) in [
        (par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7), 0.75, -1.3),
        (par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4), -2.0, 0.9),
        (par(1.0, -2.0, 1.0, -1.0, 0.0, 0.0), 1.5, 2.5),
    ] {
        let expect = 1.0 / (2.0 * PI * pr.b.abs()).sqrt();
        assert!((kernel_left(&pr, t, w).unwrap().norm() - expect).abs() < 1e-14);
        assert!((kernel_right(&pr, t, w).unwrap().norm() - expect).abs() < 1e-14);
    }
}

#[test]
fn fourier_phase_reduces_to_product() {
    // a=d=p=q=0, b=1 leaves −t·w − π/4
    let f = OlctParams::fourier();
    for (t, w) in [(0.75, -1.3), (2.0, 0.5), (-1.25, -0.25)] {
        assert!((kernel_phase(&f, t, w) - (-t * w - FRAC_PI_4)).abs() < 1e-15);
    }
}

#[test]
fn non_unimodular_rejected() {
    let err = OlctParams::new(1.0, 2.0, 3.0, 2.0, 0.0, 0.5).unwrap_err();
    assert!(matches!(err, QolctError::NotUnimodular(d) if (d - (-4.0)).abs() < 1e-12));
}

#[test]
fn degenerate_b_rejected_by_kernels() {
    let pr = par(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    assert_eq!(kernel_left(&pr, 0.0, 0.0).unwrap_err(), QolctError::DegenerateB);
    assert_eq!(kernel_right(&pr, 1.0, 1.0).unwrap_err(), QolctError::DegenerateB);
    assert!(pr.is_degenerate());
    assert!(!OlctParams::fourier().is_degenerate());
}

#[test]
fn chirp_factor_example() {
    // d=1, c=2, p=0, w=1: exponent (c·d/2)(w−p)² + wp = 1
    let pr = par(1.0, 0.0, 2.0, 1.0, 0.0, 0.0);
    let got = chirp_factor(&pr, 1.0, SplitUnit::I).unwrap();
    assert!((got - Quaternion::exp_i(1.0)).norm() < 1e-15);
    let got_j = chirp_factor(&pr, 1.0, SplitUnit::J).unwrap();
    assert!((got_j - Quaternion::exp_j(1.0)).norm() < 1e-15);
}

#[test]
fn chirp_factor_scales_by_sqrt_d() {
    let pr = par(0.5, 0.0, 0.7, 2.0, 0.3, 0.1);
    let got = chirp_factor(&pr, 1.1, SplitUnit::J).unwrap();
    assert!((got.norm() - 2.0_f64.sqrt()).abs() < 1e-14);
}

#[test]
fn chirp_factor_rejects_nonpositive_d() {
    let pr = par(-1.0, 0.0, 0.0, -1.0, 0.0, 0.0);
    assert_eq!(
        chirp_factor(&pr, 0.5, SplitUnit::I).unwrap_err(),
        QolctError::NegativeD(-1.0)
    );
}

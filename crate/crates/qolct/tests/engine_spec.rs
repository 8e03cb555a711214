use num_complex::Complex64;
use qolct::{
    degenerate_freq_grid, kernel_left, kernel_right, plancherel_analytic_ratio,
    plancherel_ratio, qolct_degenerate, qolct_forward, qolct_inverse, FreqGrid, OlctParams,
    Provenance, QolctError, QolctPlan,
};
use quatfield::{synth, ComplexPair, GridSpec, QField, Quaternion};
use std::f64::consts::{FRAC_PI_4, PI};

fn par(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> OlctParams {
    OlctParams::new(a, b, c, d, p, q).unwrap()
}

/// Brute-force two-sided quadrature at one frequency node, straight quaternion
/// arithmetic with no split bookkeeping. The oracle for every engine path.
fn brute_at(f: &QField, p1: &OlctParams, p2: &OlctParams, w1: f64, w2: f64) -> Quaternion {
    let g = f.grid;
    let mut acc = Quaternion::ZERO;
    for k1 in 0..g.n1 {
        let kl = kernel_left(p1, g.t1(k1), w1).unwrap();
        for k2 in 0..g.n2 {
            let kr = kernel_right(p2, g.t2(k2), w2).unwrap();
            acc += kl * f.at(k1, k2) * kr;
        }
    }
    acc.scale(g.cell())
}

fn rel_l2(a: &QField, b: &QField) -> f64 {
    a.sub(b).unwrap().norm() / b.norm()
}

const NODES: [(usize, usize); 10] =
    [(3, 17), (29, 5), (16, 16), (0, 31), (31, 0), (11, 24), (24, 11), (7, 7), (20, 28), (15, 2)];

#[test]
fn direct_path_matches_brute_force_oracle() {
    let grid = GridSpec::square(32, 0.5);
    let f = synth::random_smooth(grid, 1.5, 1);
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let wg = FreqGrid::aligned(&grid, &p1, &p2).unwrap();
    let spec = qolct_forward(&f, &p1, &p2, &wg).unwrap();
    assert_eq!(spec.provenance, Provenance::Direct);
    let scale = spec.max_abs();
    for (m1, m2) in NODES {
        let oracle = brute_at(&f, &p1, &p2, wg.w1(m1), wg.w2(m2));
        assert!((spec.at(m1, m2) - oracle).norm() / scale < 1e-10);
    }
}

#[test]
fn fourier_gaussian_spectrum_is_gaussian() {
    // each axis maps e^{−t²/2} to a unit phase times e^{−w²/2}
    let grid = GridSpec::square(64, 0.25);
    let f = QField::from_fn(grid, |t1, t2| {
        Quaternion::scalar((-(t1 * t1 + t2 * t2) / 2.0).exp())
    });
    let fourier = OlctParams::fourier();
    let plan = QolctPlan::new(grid, fourier, fourier).unwrap();
    let spec = plan.forward(&f).unwrap();
    let wg = plan.wgrid();
    for (m1, m2) in NODES {
        let (w1, w2) = (wg.w1(m1 + 16), wg.w2(m2 + 16));
        let expect = (-(w1 * w1 + w2 * w2) / 2.0).exp();
        assert!((spec.at(m1 + 16, m2 + 16).norm() - expect).abs() < 1e-10);
        let oracle = brute_at(&f, &fourier, &fourier, w1, w2);
        assert!((spec.at(m1 + 16, m2 + 16) - oracle).norm() < 1e-10);
    }
}

#[test]
fn split_identity_for_sandwiched_kernels() {
    // K_L·q·K_R with K_L = c_L exp_i(θ), K_R = c_R exp_j(φ) lands on the
    // i-split pair (c_L c_R e^{iθ}(f1 cosφ − conj(f2) sinφ),
    //               c_L c_R e^{−iθ}(conj(f1) sinφ + f2 cosφ))
    let q = Quaternion::new(0.3, -0.8, 0.45, 0.9);
    let (theta, phi) = (0.77, -0.41);
    let (cl, cr) = (0.25, 0.5);
    let direct =
        Quaternion::exp_i(theta).scale(cl) * q * Quaternion::exp_j(phi).scale(cr);
    let ComplexPair { f1, f2 } = q.split_i();
    let e = Complex64::from_polar(1.0, theta);
    let pair = ComplexPair {
        f1: e * (f1 * phi.cos() - f2.conj() * phi.sin()) * (cl * cr),
        f2: e.conj() * (f1.conj() * phi.sin() + f2 * phi.cos()) * (cl * cr),
    };
    assert!((direct - Quaternion::from_split_i(pair)).norm() < 1e-15);
}

#[test]
fn fast_path_matches_direct() {
    let grid = GridSpec::square(32, 0.5);
    let f = synth::random_smooth(grid, 1.5, 2);
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let fast = plan.forward(&f).unwrap();
    assert_eq!(fast.provenance, Provenance::Fast);
    let direct = qolct_forward(&f, &p1, &p2, &plan.wgrid()).unwrap();
    assert!(fast.sub(&direct).unwrap().max_abs() / direct.max_abs() < 1e-10);
}

#[test]
fn fourier_fast_path_matches_textbook_dft() {
    // hardcoded −t·w − π/4 phases, independent of the kernel module
    let grid = GridSpec::square(8, 0.5);
    let f = synth::random_smooth(grid, 1.2, 3);
    let fourier = OlctParams::fourier();
    let plan = QolctPlan::new(grid, fourier, fourier).unwrap();
    let spec = plan.forward(&f).unwrap();
    let wg = plan.wgrid();
    let amp = 1.0 / (2.0 * PI).sqrt();
    for m1 in 0..8 {
        for m2 in 0..8 {
            let mut acc = Quaternion::ZERO;
            for k1 in 0..8 {
                let li = Quaternion::exp_i(-grid.t1(k1) * wg.w1(m1) - FRAC_PI_4).scale(amp);
                for k2 in 0..8 {
                    let rj =
                        Quaternion::exp_j(-grid.t2(k2) * wg.w2(m2) - FRAC_PI_4).scale(amp);
                    acc += li * f.at(k1, k2) * rj;
                }
            }
            assert!((spec.at(m1, m2) - acc.scale(grid.cell())).norm() < 1e-12);
        }
    }
}

#[test]
fn fast_round_trip_across_param_sets() {
    let grid = GridSpec::square(32, 0.5);
    let f = synth::random_smooth(grid, 1.5, 4);
    let sets = [
        (OlctParams::fourier(), OlctParams::fourier()),
        (par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7), par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4)),
        (par(0.0, -1.0, 1.0, 0.0, 0.0, 0.0), par(1.0, -2.0, 1.0, -1.0, 0.2, -0.4)),
    ];
    for (p1, p2) in sets {
        let plan = QolctPlan::new(grid, p1, p2).unwrap();
        let back = plan.inverse(&plan.forward(&f).unwrap()).unwrap();
        assert!(rel_l2(&back, &f) < 1e-10);
    }
}

#[test]
fn direct_adjoint_round_trip() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 5);
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let wg = FreqGrid::aligned(&grid, &p1, &p2).unwrap();
    let spec = qolct_forward(&f, &p1, &p2, &wg).unwrap();
    let back = qolct_inverse(&spec, &p1, &p2, &grid).unwrap();
    assert!(rel_l2(&back, &f) < 1e-10);
}

#[test]
fn one_hot_round_trip_and_plancherel() {
    let grid = GridSpec::square(32, 0.5);
    let f = QField::one_hot(grid, 10, 21, Quaternion::new(0.5, -1.0, 0.25, 2.0));
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let back = plan.inverse(&plan.forward(&f).unwrap()).unwrap();
    assert!(rel_l2(&back, &f) < 1e-10);
    assert!((plancherel_ratio(&f, &p1, &p2).unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn zero_field_maps_to_zero_both_ways() {
    let grid = GridSpec::square(16, 0.5);
    let p1 = OlctParams::fourier();
    let p2 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let spec = plan.forward(&QField::zero(grid)).unwrap();
    assert_eq!(spec.max_abs(), 0.0);
    let back = plan.inverse(&spec).unwrap();
    assert_eq!(back.max_abs(), 0.0);
}

#[test]
fn real_linear_combinations_pass_through() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 6);
    let g = synth::random_smooth(grid, 1.2, 7);
    let (alpha, beta) = (0.7, -1.3);
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let combo = plan.forward(&f.scale(alpha).add(&g.scale(beta)).unwrap()).unwrap();
    let apart = plan
        .forward(&f)
        .unwrap()
        .scale(alpha)
        .add(&plan.forward(&g).unwrap().scale(beta))
        .unwrap();
    assert!(combo.sub(&apart).unwrap().max_abs() / apart.max_abs() < 1e-12);
}

#[test]
fn unaligned_grids_rejected_by_inverse() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 8);
    let p1 = OlctParams::fourier();
    let p2 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let custom = FreqGrid::explicit(16, 16, 0.3, 0.3, -2.4, -2.4);
    let spec = qolct_forward(&f, &p1, &p2, &custom).unwrap();
    assert_eq!(
        qolct_inverse(&spec, &p1, &p2, &grid).unwrap_err(),
        QolctError::UnalignedGrid
    );
    // a plan rejects spectra from any other grid, aligned or not
    let plan = QolctPlan::new(grid, p1, p2).unwrap();
    let other = QolctPlan::new(GridSpec::square(16, 0.25), p1, p2).unwrap();
    let foreign = other.forward(&synth::random_smooth(GridSpec::square(16, 0.25), 1.2, 8)).unwrap();
    assert_eq!(plan.inverse(&foreign).unwrap_err(), QolctError::UnalignedGrid);
}

#[test]
fn plan_rejects_fields_from_other_grids() {
    let plan = QolctPlan::new(GridSpec::square(16, 0.5), OlctParams::fourier(), OlctParams::fourier())
        .unwrap();
    let stranger = QField::zero(GridSpec::square(32, 0.5));
    assert!(matches!(
        plan.forward(&stranger).unwrap_err(),
        QolctError::Field(quatfield::FieldError::GridMismatch)
    ));
}

#[test]
fn degenerate_params_rejected_by_regular_paths() {
    let grid = GridSpec::square(16, 0.5);
    let deg = par(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    assert_eq!(
        FreqGrid::aligned(&grid, &deg, &OlctParams::fourier()).unwrap_err(),
        QolctError::DegenerateB
    );
    assert_eq!(
        QolctPlan::new(grid, OlctParams::fourier(), deg).err().unwrap(),
        QolctError::DegenerateB
    );
}

#[test]
fn degenerate_identity_params_reproduce_the_field() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 9);
    let ident = par(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    let wg = degenerate_freq_grid(&grid, &ident, &ident).unwrap();
    assert!(!wg.aligned);
    let spec = qolct_degenerate(&f, &ident, &ident, &wg).unwrap();
    for k1 in 0..grid.n1 {
        for k2 in 0..grid.n2 {
            assert_eq!(spec.at(k1, k2), f.at(k1, k2));
        }
    }
}

#[test]
fn degenerate_offsets_chirp_without_changing_magnitude() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 10);
    let d1 = par(1.0, 0.0, 0.0, 1.0, 1.0, 0.3);
    let d2 = par(1.0, 0.0, 0.0, 1.0, 0.5, -0.2);
    let wg = degenerate_freq_grid(&grid, &d1, &d2).unwrap();
    let spec = qolct_degenerate(&f, &d1, &d2, &wg).unwrap();
    let mut differs = false;
    for k1 in 0..grid.n1 {
        for k2 in 0..grid.n2 {
            assert!((spec.at(k1, k2).norm() - f.at(k1, k2).norm()).abs() < 1e-12);
            differs |= (spec.at(k1, k2) - f.at(k1, k2)).norm() > 1e-6;
        }
    }
    assert!(differs);
}

#[test]
fn mixed_degenerate_branch_scales_by_sqrt_d() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 11);
    let p1 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let ident = par(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    let gen = par(0.5, 0.0, 0.7, 2.0, 0.3, 0.1);
    let wg_id = degenerate_freq_grid(&grid, &p1, &ident).unwrap();
    let wg_gen = degenerate_freq_grid(&grid, &p1, &gen).unwrap();
    let base = qolct_degenerate(&f, &p1, &ident, &wg_id).unwrap();
    let spec = qolct_degenerate(&f, &p1, &gen, &wg_gen).unwrap();
    // same left pass, so magnitudes differ by exactly √d2
    for m1 in 0..grid.n1 {
        for m2 in 0..grid.n2 {
            let want = base.at(m1, m2).norm() * 2.0_f64.sqrt();
            assert!((spec.at(m1, m2).norm() - want).abs() < 1e-12);
        }
    }
}

#[test]
fn degenerate_grid_for_regular_params_is_the_aligned_grid() {
    let grid = GridSpec::square(16, 0.5);
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = OlctParams::fourier();
    assert_eq!(
        degenerate_freq_grid(&grid, &p1, &p2).unwrap(),
        FreqGrid::aligned(&grid, &p1, &p2).unwrap()
    );
}

#[test]
fn off_lattice_resample_rejected() {
    let grid = GridSpec::square(16, 0.5);
    let f = synth::random_smooth(grid, 1.2, 12);
    let d1 = par(1.0, 0.0, 0.0, 1.0, 0.0, 0.0);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    let mut wg = degenerate_freq_grid(&grid, &d1, &p2).unwrap();
    wg.origin1 += 0.3 * grid.dt1;
    assert_eq!(
        qolct_degenerate(&f, &d1, &p2, &wg).unwrap_err(),
        QolctError::OffGridResample
    );
}

#[test]
fn negative_d_rejected_on_degenerate_axis() {
    let grid = GridSpec::square(16, 0.5);
    let neg = par(-1.0, 0.0, 0.0, -1.0, 0.0, 0.0);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    assert_eq!(
        degenerate_freq_grid(&grid, &neg, &p2).unwrap_err(),
        QolctError::NegativeD(-1.0)
    );
    let wg = FreqGrid::explicit(16, 16, 0.5, 0.5, -4.0, -4.0);
    let f = synth::random_smooth(grid, 1.2, 13);
    assert_eq!(
        qolct_degenerate(&f, &neg, &p2, &wg).unwrap_err(),
        QolctError::NegativeD(-1.0)
    );
}

#[test]
fn plancherel_holds_for_gaussians_and_flags_zero() {
    let grid = GridSpec::square(64, 0.25);
    let f = synth::gaussian(grid, 1.0, 0.8, Quaternion::new(0.5, 0.3, -0.4, 0.2));
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);
    assert!((plancherel_ratio(&f, &p1, &p2).unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(
        plancherel_ratio(&QField::zero(grid), &p1, &p2).unwrap_err(),
        QolctError::ZeroSignal
    );
}

#[test]
fn analytic_ratio_detects_grid_truncation() {
    // discrete ratio stays at 1 on a too-small grid; the continuum reference
    // exposes the lost tail
    let beta = Quaternion::new(0.5, 0.3, -0.4, 0.2);
    let (sig1, sig2) = (1.0, 0.8);
    let reference = beta.norm_sqr() * PI * sig1 * sig2;
    let p1 = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let p2 = par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4);

    let wide = GridSpec::square(64, 0.25);
    let f = synth::gaussian(wide, sig1, sig2, beta);
    let healthy = plancherel_analytic_ratio(&f, &p1, &p2, reference).unwrap();
    assert!((healthy - 1.0).abs() < 1e-9);

    let cramped = GridSpec::square(16, 0.25);
    let t = synth::gaussian(cramped, sig1, sig2, beta);
    assert!((plancherel_ratio(&t, &p1, &p2).unwrap() - 1.0).abs() < 1e-12);
    let truncated = plancherel_analytic_ratio(&t, &p1, &p2, reference).unwrap();
    assert!((truncated - 1.0).abs() > 1e-6);
}

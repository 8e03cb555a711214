//! The pinned verification suite. `verify` and the acceptance test target
//! both call these records, so each threshold lives here exactly once.

use crate::config::{RunConfig, Scale};
use crate::report::CheckRecord;
use num_complex::Complex64;
use qolct::{
    analyze_default, check_modulation, check_parity, check_time_shift, check_window_shift,
    coeff_inner, plancherel_analytic_ratio, plancherel_ratio, qolct_forward, synthesize,
    FreqGrid, OlctParams, QolctError, QolctPlan, WindowSpec,
};
use qolct_analysis::{
    chirp_rect_coefficient, coefficient_profile, concentration_measure, heisenberg_check,
    kernel_cancelling_chirp, local_moment_check, local_uncertainty_check, log_constant,
    log_uncertainty_check, make_gaussian, make_rect_window, AnalysisError, ConcentrationRegion,
    LogMode, RectWindowSpec,
};
use quatfield::{synth, GridSpec, QField, Quaternion};
use std::f64::consts::PI;
use std::time::Instant;

pub const PLANCHEREL_TOL: f64 = 1e-3;
pub const PLANCHEREL_RUNTIME_LIMIT: f64 = 10.0;
pub const ROUNDTRIP_TOL: f64 = 1e-10;
pub const FAST_DIRECT_TOL: f64 = 1e-10;
pub const ENERGY_TOL_N32: f64 = 1e-2;
pub const ENERGY_TOL_N64: f64 = 1e-3;
pub const ENERGY_RUNTIME_LIMIT: f64 = 120.0;
pub const INNER_PRODUCT_TOL: f64 = 1e-2;
pub const INNER_PRODUCT_SCALAR_I_TOL: f64 = 1e-9;
pub const RECONSTRUCTION_TOL: f64 = 1e-2;
pub const COVARIANCE_TOL: f64 = 1e-9;
pub const HEISENBERG_SLACK: f64 = 5e-3;
pub const NEAR_MINIMIZER_CEILING: f64 = 1.10;
pub const LOG_GAP_SLACK: f64 = 5e-3;
pub const LOG_CONSTANT_REF: f64 = -2.65666;
pub const LOG_CONSTANT_TOL: f64 = 1e-4;
pub const SUP_BOUND_SLACK: f64 = 1e-9;
pub const CONCENTRATION_FRACTION: f64 = 0.9;
pub const LOCAL_MOMENT_ALPHA: f64 = 1.0;
pub const LOCAL_MOMENT_R0: f64 = 0.5;
pub const CHIRP_RECT_TOL: f64 = 1e-3;
pub const CHIRP_RECT_DISCRETE_TOL: f64 = 1e-12;
pub const SUITE_CASES: usize = 20;
pub const SUITE_SEED: u64 = 800;

fn par(a: f64, b: f64, c: f64, d: f64, p: f64, q: f64) -> OlctParams {
    OlctParams::new(a, b, c, d, p, q).expect("suite parameters are unimodular")
}

fn fourier_pair() -> (OlctParams, OlctParams) {
    (OlctParams::fourier(), OlctParams::fourier())
}

fn pair_general() -> (OlctParams, OlctParams) {
    (par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7), par(2.0, 1.0, 1.0, 1.0, 0.3, 0.4))
}

fn pair_worked() -> (OlctParams, OlctParams) {
    (par(1.0, 1.0, 1.0, 2.0, 0.3, -0.2), par(2.0, 1.0, 3.0, 2.0, 0.0, 0.5))
}

fn pair_b2() -> (OlctParams, OlctParams) {
    (par(0.0, 2.0, -0.5, 0.0, 0.0, 0.0), par(0.0, 2.0, -0.5, 0.0, 0.0, 0.0))
}

fn grid32() -> GridSpec {
    GridSpec::square(32, 0.5)
}

/// Quaternion amplitude shared by the closed-form reference artifacts.
pub fn reference_amplitude() -> Quaternion {
    Quaternion::new(0.3, -0.7, 0.2, 0.4)
}

/// Energy ratio of a unit-variance Gaussian against its continuum norm on the
/// configured grid; the one config-sensitive record, so an undersized grid
/// fails here first.
pub fn plancherel_analytic_record(cfg: &RunConfig) -> Result<CheckRecord, QolctError> {
    let f = synth::gaussian(cfg.grid(), 1.0, 1.0, Quaternion::ONE);
    let ratio = plancherel_analytic_ratio(&f, &cfg.p1, &cfg.p2, PI)?;
    Ok(CheckRecord::at_most("plancherel_analytic", ratio, 1.0, (ratio - 1.0).abs(), PLANCHEREL_TOL))
}

pub fn plancherel_records() -> Vec<CheckRecord> {
    let start = Instant::now();
    let grid = GridSpec::square(64, 0.25);
    let f = synth::normalized_gaussian(grid, 1.0, 1.0);
    let general = par(1.0, 2.0, 1.0, 3.0, 0.5, -0.7);
    let sets = [
        ("plancherel_fourier", fourier_pair()),
        ("plancherel_general", (general, general)),
    ];
    let mut recs = Vec::new();
    for (name, (p1, p2)) in sets {
        let ratio = plancherel_ratio(&f, &p1, &p2).expect("plancherel fixture");
        recs.push(CheckRecord::at_most(name, ratio, 1.0, (ratio - 1.0).abs(), PLANCHEREL_TOL));
    }
    let elapsed = start.elapsed().as_secs_f64();
    recs.push(CheckRecord::at_most(
        "plancherel_runtime_seconds",
        elapsed,
        PLANCHEREL_RUNTIME_LIMIT,
        elapsed,
        PLANCHEREL_RUNTIME_LIMIT,
    ));
    recs
}

pub fn roundtrip_record() -> CheckRecord {
    let grid = grid32();
    let (p1, p2) = pair_general();
    let plan = QolctPlan::new(grid, p1, p2).expect("roundtrip fixture");
    let mut worst = 0.0f64;
    for seed in [41, 42, 43, 44, 45] {
        let f = synth::random_smooth(grid, 1.2, seed);
        let back = plan
            .inverse(&plan.forward(&f).expect("forward"))
            .expect("inverse");
        worst = worst.max(back.sub(&f).expect("grid").norm() / f.norm());
    }
    CheckRecord::at_most("roundtrip_inversion", worst, 0.0, worst, ROUNDTRIP_TOL)
}

pub fn fast_direct_record() -> CheckRecord {
    let grid = grid32();
    let f = synth::random_smooth(grid, 1.2, 99);
    let mut worst = 0.0f64;
    for (p1, p2) in [fourier_pair(), pair_general(), pair_worked()] {
        let plan = QolctPlan::new(grid, p1, p2).expect("plan");
        let fast = plan.forward(&f).expect("fast path");
        let direct = qolct_forward(&f, &p1, &p2, &plan.wgrid()).expect("direct path");
        let scale = direct.samples.iter().fold(0.0f64, |m, q| m.max(q.norm()));
        let dev = fast
            .samples
            .iter()
            .zip(&direct.samples)
            .fold(0.0f64, |m, (a, b)| m.max((*a - *b).norm()));
        worst = worst.max(dev / scale);
    }
    CheckRecord::at_most("fast_matches_direct", worst, 0.0, worst, FAST_DIRECT_TOL)
}

pub fn energy_records() -> Vec<CheckRecord> {
    let start = Instant::now();
    let (p1, p2) = pair_general();

    let g32 = grid32();
    let f = synth::random_smooth(g32, 1.3, 51);
    let w = WindowSpec::new(synth::normalized_gaussian(g32, 1.0, 1.0)).expect("window");
    let c = analyze_default(&f, &w, &p1, &p2).expect("analyze");
    let expect32 = f.norm_sqr() * w.norm_sqr();
    let m32 = (c.energy() / expect32 - 1.0).abs();

    // n = 64 runs streamed; the materialized tensor would hold 64^4
    // quaternions, half a gigabyte
    let g64 = GridSpec::square(64, 0.25);
    let f64f = synth::random_smooth(g64, 1.3, 52);
    let w64 = WindowSpec::new(synth::normalized_gaussian(g64, 1.0, 1.0)).expect("window");
    let profile = coefficient_profile(&f64f, &w64, &p1, &p2).expect("profile");
    let expect64 = f64f.norm_sqr() * w64.norm_sqr();
    let m64 = (profile.energy / expect64 - 1.0).abs();

    let elapsed = start.elapsed().as_secs_f64();
    vec![
        CheckRecord::at_most("energy_conservation_n32", c.energy(), expect32, m32, ENERGY_TOL_N32),
        CheckRecord::at_most("energy_conservation_n64", profile.energy, expect64, m64, ENERGY_TOL_N64),
        CheckRecord::at_most(
            "energy_runtime_seconds",
            elapsed,
            ENERGY_RUNTIME_LIMIT,
            elapsed,
            ENERGY_RUNTIME_LIMIT,
        ),
    ]
}

/// Candidate factorization ⟨C1, C2⟩ = ⟨f1, f2⟩·conj(⟨g1, g2⟩) over five
/// random quadruples, plus the shared-window reduction that does hold in the
/// scalar and i components.
pub fn inner_product_records() -> Vec<CheckRecord> {
    let grid = grid32();
    let (p1, p2) = pair_worked();
    let mut worst = 0.0f64;
    for k in 0..5u64 {
        let f1 = synth::random_smooth(grid, 1.3, 300 + 4 * k);
        let f2 = synth::random_smooth(grid, 1.3, 301 + 4 * k);
        let g1 = WindowSpec::new(synth::random_smooth(grid, 1.0, 302 + 4 * k)).expect("g1");
        let g2 = WindowSpec::new(synth::random_smooth(grid, 1.0, 303 + 4 * k)).expect("g2");
        let c1 = analyze_default(&f1, &g1, &p1, &p2).expect("analyze");
        let c2 = analyze_default(&f2, &g2, &p1, &p2).expect("analyze");
        let lhs = coeff_inner(&c1, &c2).expect("inner");
        let rhs = f1.inner(&f2).expect("inner") * g1.g.inner(&g2.g).expect("inner").conj();
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    let relation =
        CheckRecord::at_most("inner_product_relation", worst, 0.0, worst, INNER_PRODUCT_TOL);

    let f1 = synth::random_smooth(grid, 1.3, 321);
    let f2 = synth::random_smooth(grid, 1.3, 322);
    let g = WindowSpec::new(synth::random_smooth(grid, 1.0, 320)).expect("g");
    let c1 = analyze_default(&f1, &g, &p1, &p2).expect("analyze");
    let c2 = analyze_default(&f2, &g, &p1, &p2).expect("analyze");
    let lhs = coeff_inner(&c1, &c2).expect("inner");
    let rhs = f1.inner(&f2).expect("inner").scale(g.norm_sqr());
    let dev = (lhs.w - rhs.w).abs().max((lhs.x - rhs.x).abs()) / rhs.norm();
    let scalar_i = CheckRecord::at_most(
        "inner_product_scalar_i",
        dev,
        0.0,
        dev,
        INNER_PRODUCT_SCALAR_I_TOL,
    );
    vec![relation, scalar_i]
}

pub fn reconstruction_record() -> CheckRecord {
    let grid = grid32();
    let (p1, p2) = pair_general();
    let f = synth::gaussian(grid, 0.9, 1.1, Quaternion::new(0.7, -0.3, 0.2, 0.1));
    let g = WindowSpec::new(synth::normalized_gaussian(grid, 1.0, 1.0)).expect("window");
    let c = analyze_default(&f, &g, &p1, &p2).expect("analyze");
    let back = synthesize(&c, &g, &g, &p1, &p2).expect("synthesize");
    let rel = back.sub(&f).expect("grid").norm() / f.norm();
    CheckRecord::at_most("reconstruction", rel, 0.0, rel, RECONSTRUCTION_TOL)
}

pub fn covariance_records() -> Vec<CheckRecord> {
    let grid = grid32();
    let f = synth::gaussian(grid, 1.0, 0.8, Quaternion::new(0.6, -0.2, 0.3, 0.5));
    let g = WindowSpec::new(synth::gaussian(grid, 0.8, 0.8, Quaternion::ONE)).expect("window");

    let s1 = par(0.0, 1.0, -1.0, 0.0, 0.3, -0.2);
    let s2 = par(0.0, 1.0, -1.0, 0.0, -0.1, 0.5);
    let r_shift = check_time_shift(&f, &g, &s1, &s2, 2.0 * grid.dt1, -grid.dt2)
        .expect("time shift fixture");

    let m1 = par(0.0, 1.0, -1.0, 0.0, 0.0, -0.2);
    let m2 = par(0.0, 1.0, -1.0, 0.0, 0.0, 0.5);
    let wg = FreqGrid::aligned(&grid, &m1, &m2).expect("aligned");
    let r_mod = check_modulation(&f, &g, &m1, &m2, 3.0 * wg.dw1, -wg.dw2)
        .expect("modulation fixture");

    let (a1, a2) = pair_worked();
    let r_win = check_window_shift(&f, &g, &a1, &a2, grid.dt1, 0.0).expect("window shift");

    let fp = synth::random_smooth(grid, 1.2, 41);
    let gp = WindowSpec::new(synth::gaussian(grid, 0.9, 0.7, Quaternion::new(0.8, 0.1, -0.3, 0.2)))
        .expect("window");
    let parity = check_parity(&fp, &gp, &a1, &a2).expect("parity");

    vec![
        CheckRecord::at_most("covariance_time_shift", r_shift, 0.0, r_shift, COVARIANCE_TOL),
        CheckRecord::at_most("covariance_modulation", r_mod, 0.0, r_mod, COVARIANCE_TOL),
        CheckRecord::at_most("covariance_window_shift", r_win, 0.0, r_win, COVARIANCE_TOL),
        CheckRecord::at_most(
            "parity_factor_residual",
            parity.factor,
            1.0,
            parity.residual,
            COVARIANCE_TOL,
        ),
    ]
}

pub struct SuiteCase {
    pub label: String,
    pub f: QField,
    pub window: WindowSpec,
    pub p1: OlctParams,
    pub p2: OlctParams,
}

/// Twenty seeded signal/window/parameter triples with unit-energy windows.
/// Case k uses seed SUITE_SEED + k; parameter pairs, window widths, and
/// envelope widths cycle with coprime periods so no two cases coincide.
pub fn uncertainty_suite() -> Vec<SuiteCase> {
    let grid = grid32();
    let pairs = [fourier_pair(), pair_general(), pair_worked(), pair_b2()];
    let widths = [0.8, 1.0, 1.25, 1.5, 0.9];
    let envelopes = [1.0, 1.25, 1.45];
    (0..SUITE_CASES)
        .map(|k| {
            let seed = SUITE_SEED + k as u64;
            let (p1, p2) = pairs[k % pairs.len()];
            let sg = widths[k % widths.len()];
            let f = synth::random_smooth(grid, envelopes[k % envelopes.len()], seed);
            let window =
                WindowSpec::new(synth::normalized_gaussian(grid, sg, sg)).expect("window");
            SuiteCase { label: format!("seed {seed}"), f, window, p1, p2 }
        })
        .collect()
}

pub fn heisenberg_records() -> Vec<CheckRecord> {
    let mut min_ratio = f64::INFINITY;
    for case in uncertainty_suite() {
        let reports = heisenberg_check(&case.f, &case.window, &case.p1, &case.p2)
            .expect("suite case");
        for r in reports {
            min_ratio = min_ratio.min(r.ratio);
        }
    }
    let suite = CheckRecord::at_least(
        "heisenberg_suite",
        min_ratio,
        1.0,
        min_ratio,
        1.0 - HEISENBERG_SLACK,
    );

    let grid = grid32();
    let f = synth::normalized_gaussian(grid, 1.0, 1.0);
    let w = WindowSpec::new(synth::normalized_gaussian(grid, 2.5, 2.5)).expect("window");
    let (p1, p2) = fourier_pair();
    let reports = heisenberg_check(&f, &w, &p1, &p2).expect("near minimizer");
    let ratio = reports[0].ratio.max(reports[1].ratio);
    let near = CheckRecord::at_most(
        "heisenberg_near_minimizer",
        ratio,
        1.0,
        ratio,
        NEAR_MINIMIZER_CEILING,
    );
    vec![suite, near]
}

pub fn log_constant_record() -> CheckRecord {
    let d = log_constant();
    CheckRecord::at_most(
        "log_constant",
        d,
        LOG_CONSTANT_REF,
        (d - LOG_CONSTANT_REF).abs(),
        LOG_CONSTANT_TOL,
    )
}

pub fn log_records() -> Vec<CheckRecord> {
    let mut min_gap = f64::INFINITY;
    for case in uncertainty_suite() {
        let r = log_uncertainty_check(&case.f, &case.window, &case.p1, &case.p2, LogMode::Euclidean)
            .expect("suite case");
        min_gap = min_gap.min(r.gap / (case.f.norm_sqr() * case.window.norm_sqr()));
    }
    let gap =
        CheckRecord::at_least("log_gap_suite", min_gap, 0.0, min_gap, -LOG_GAP_SLACK);

    // narrow pair on a fine grid: the only regime where the left side dips
    // below zero, which keeps the bound non-vacuous
    let grid = GridSpec::square(64, 0.125);
    let f = synth::normalized_gaussian(grid, 0.5, 0.5);
    let g = WindowSpec::new(synth::normalized_gaussian(grid, 0.5, 0.5)).expect("window");
    let (p1, p2) = fourier_pair();
    let r = log_uncertainty_check(&f, &g, &p1, &p2, LogMode::Euclidean).expect("narrow pair");
    let negative = CheckRecord::at_most("log_negative_case", r.lhs, 0.0, r.lhs, 0.0);

    vec![gap, log_constant_record(), negative]
}

pub fn sup_bound_record() -> CheckRecord {
    let mut worst = 0.0f64;
    for case in uncertainty_suite() {
        let profile = coefficient_profile(&case.f, &case.window, &case.p1, &case.p2)
            .expect("suite case");
        let bound = case.f.norm() * case.window.norm()
            / (2.0 * PI * (case.p1.b * case.p2.b).abs().sqrt());
        worst = worst.max(profile.sup / bound);
    }
    CheckRecord::at_most("sup_bound", worst, 1.0, worst, 1.0 + SUP_BOUND_SLACK)
}

pub fn concentration_records() -> Vec<CheckRecord> {
    let grid = grid32();
    let f = synth::normalized_gaussian(grid, 1.0, 1.0);
    let g = WindowSpec::new(synth::normalized_gaussian(grid, 1.0, 1.0)).expect("window");
    let sets = [
        ("concentration_unit_b", fourier_pair()),
        ("concentration_b_four", pair_b2()),
    ];
    sets.iter()
        .map(|(name, (p1, p2))| {
            let c = analyze_default(&f, &g, p1, p2).expect("analyze");
            let rep = concentration_measure(&c, CONCENTRATION_FRACTION).expect("concentration");
            let root = (p1.b * p2.b).abs().sqrt();
            let bound = 2.0 * PI * CONCENTRATION_FRACTION * root - c.cell();
            CheckRecord::at_least(
                name,
                rep.region.measure,
                bound,
                rep.region.measure - bound,
                0.0,
            )
        })
        .collect()
}

pub fn local_records() -> Vec<CheckRecord> {
    let grid = grid32();
    let f = synth::normalized_gaussian(grid, 1.0, 1.0);
    let g = WindowSpec::new(synth::normalized_gaussian(grid, 1.0, 1.0)).expect("window");
    let (p1, p2) = fourier_pair();
    let c = analyze_default(&f, &g, &p1, &p2).expect("analyze");

    let wlen = c.wgrid.len();
    let coords = |idx: usize| {
        let (iu, i) = (idx / wlen, idx % wlen);
        [
            c.ugrid.t1(iu / c.ugrid.n2),
            c.ugrid.t2(iu % c.ugrid.n2),
            c.wgrid.w1(i / c.wgrid.n2),
            c.wgrid.w2(i % c.wgrid.n2),
        ]
    };
    let peak = (0..c.samples.len())
        .max_by(|&a, &b| c.samples[a].norm_sqr().total_cmp(&c.samples[b].norm_sqr()))
        .expect("non-empty tensor");
    let pc = coords(peak);
    let dist = |idx: usize| {
        let x = coords(idx);
        (0..4).map(|k| (x[k] - pc[k]) * (x[k] - pc[k])).sum::<f64>()
    };
    let mut order: Vec<usize> = (0..c.samples.len()).collect();
    order.sort_by(|&a, &b| dist(a).total_cmp(&dist(b)));

    let mut recs: Vec<CheckRecord> = [("local_energy_mu_quarter", 0.25), ("local_energy_mu_half", 0.5)]
        .iter()
        .map(|&(name, target)| {
            let take = (target / c.cell()).floor() as usize;
            let mut mask = vec![false; c.samples.len()];
            for &idx in order.iter().take(take) {
                mask[idx] = true;
            }
            let region = ConcentrationRegion::from_mask(mask, c.cell());
            let rep = local_uncertainty_check(&c, &f, &g, &region).expect("local bound");
            CheckRecord::at_least(name, rep.lhs, rep.rhs, rep.rhs - rep.lhs, 0.0)
        })
        .collect();

    let rep = local_moment_check(&c, &f, &g, LOCAL_MOMENT_ALPHA, LOCAL_MOMENT_R0)
        .expect("moment bound");
    recs.push(CheckRecord::at_least(
        "local_moment_bound",
        rep.lhs,
        rep.rhs,
        rep.rhs - rep.lhs,
        0.0,
    ));
    recs
}

pub struct ChirpRectComparison {
    /// engine against hand-written discrete geometric sums, sup-relative
    pub discrete_rel: f64,
    /// continuous closed form against the engine on the interior band
    pub band_rel: f64,
}

/// Windowed transform of an amplitude-constant chirp against a rectangular
/// window of half-width 8 steps, evaluated at u = (0, 0) and
/// u = (4·dt1, −2·dt2). The discrete figure pins the engine to the
/// geometric-sum reading of the same integral; the band figure measures the
/// continuous formula against the engine away from the removable frequency.
pub fn chirp_rect_comparison(
    grid: GridSpec,
    p1: &OlctParams,
    p2: &OlctParams,
) -> Result<ChirpRectComparison, AnalysisError> {
    let beta = reference_amplitude();
    let a = 8.0 * grid.dt1;
    let f = make_gaussian(&kernel_cancelling_chirp(p1, p2, beta), grid);
    let window = make_rect_window(&RectWindowSpec { a }, grid)?;
    let plan = QolctPlan::new(grid, *p1, *p2).map_err(AnalysisError::from)?;
    let wgrid = plan.wgrid();
    let u_points = [(0.0, 0.0), (4.0 * grid.dt1, -2.0 * grid.dt2)];

    let axis_sum = |par: &OlctParams, w: f64, u: f64, dt: f64, origin: f64, n: usize| {
        let mu = (-2.0 * w * (par.d * par.p - par.b * par.q) + par.d * (w * w + par.p * par.p))
            / (2.0 * par.b)
            - PI / 4.0;
        let amp = 1.0 / (2.0 * PI * par.b).sqrt();
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let t = origin + k as f64 * dt;
            if (t - u).abs() < a - 1e-12 {
                s += Complex64::new(0.0, -t * (w - par.p) / par.b).exp();
            }
        }
        amp * dt * Complex64::new(0.0, mu).exp() * s
    };

    let mut disc_worst = 0.0f64;
    let mut disc_scale = 0.0f64;
    let mut band_worst = 0.0f64;
    let mut band_scale = 0.0f64;
    for (u1, u2) in u_points {
        let shifted = window.shift(u1, u2).map_err(qolct::QolctError::from)?;
        let windowed = f.mul_pointwise(&shifted.conj()).map_err(qolct::QolctError::from)?;
        let spec = plan.forward(&windowed).map_err(AnalysisError::from)?;
        for m1 in 0..wgrid.n1 {
            for m2 in 0..wgrid.n2 {
                let got = spec.samples[wgrid.index(m1, m2)];
                if m1 % 7 == 0 && m2 % 5 == 0 {
                    let s1 = axis_sum(p1, wgrid.w1(m1), u1, grid.dt1, grid.origin1, grid.n1);
                    let s2 = axis_sum(p2, wgrid.w2(m2), u2, grid.dt2, grid.origin2, grid.n2);
                    let expect = Quaternion::from_c_i(s1) * beta * Quaternion::from_c_j(s2);
                    disc_worst = disc_worst.max((got - expect).norm());
                    disc_scale = disc_scale.max(expect.norm());
                }
                // stay more than one grid step from the removable frequency
                if m1.abs_diff(wgrid.n1 / 2) < 2 || m2.abs_diff(wgrid.n2 / 2) < 2 {
                    continue;
                }
                let closed = chirp_rect_coefficient(
                    u1,
                    u2,
                    wgrid.w1(m1),
                    wgrid.w2(m2),
                    p1,
                    p2,
                    a,
                    beta,
                )?;
                band_worst = band_worst.max((got - closed).norm());
                band_scale = band_scale.max(closed.norm());
            }
        }
    }
    Ok(ChirpRectComparison {
        discrete_rel: disc_worst / disc_scale,
        band_rel: band_worst / band_scale,
    })
}

pub fn chirp_rect_records() -> Vec<CheckRecord> {
    let (p1, p2) = pair_worked();
    let cmp = chirp_rect_comparison(GridSpec::square(64, 0.25), &p1, &p2)
        .expect("chirp fixture");
    vec![
        CheckRecord::at_most(
            "chirp_rect_discrete",
            cmp.discrete_rel,
            0.0,
            cmp.discrete_rel,
            CHIRP_RECT_DISCRETE_TOL,
        ),
        CheckRecord::at_most(
            "chirp_rect_quadrature",
            cmp.band_rel,
            0.0,
            cmp.band_rel,
            CHIRP_RECT_TOL,
        ),
    ]
}

pub fn run_suite(cfg: &RunConfig, scale: Scale) -> Vec<CheckRecord> {
    let mut recs = Vec::new();
    match plancherel_analytic_record(cfg) {
        Ok(r) => recs.push(r),
        Err(e) => {
            eprintln!("plancherel_analytic could not run: {e}");
            recs.push(CheckRecord {
                name: "plancherel_analytic".into(),
                lhs: f64::NAN,
                rhs: 1.0,
                metric: f64::NAN,
                tol: PLANCHEREL_TOL,
                pass: false,
            });
        }
    }
    recs.push(roundtrip_record());
    recs.push(fast_direct_record());
    recs.extend(covariance_records());
    if scale == Scale::Smoke {
        // desk mode gets this record through log_records
        recs.push(log_constant_record());
    }
    if scale == Scale::Desk {
        recs.extend(plancherel_records());
        recs.extend(energy_records());
        recs.extend(inner_product_records());
        recs.push(reconstruction_record());
        recs.extend(heisenberg_records());
        recs.extend(log_records());
        recs.push(sup_bound_record());
        recs.extend(concentration_records());
        recs.extend(local_records());
        recs.extend(chirp_rect_records());
    }
    recs
}

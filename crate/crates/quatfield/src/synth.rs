//! Deterministic test and demo signals.

use crate::{GridSpec, QField, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// β·exp(−t1²/(2σ1²) − t2²/(2σ2²)).
pub fn gaussian(grid: GridSpec, sig1: f64, sig2: f64, beta: Quaternion) -> QField {
    QField::from_fn(grid, |t1, t2| {
        let e = (-t1 * t1 / (2.0 * sig1 * sig1) - t2 * t2 / (2.0 * sig2 * sig2)).exp();
        beta.scale(e)
    })
}

/// Real Gaussian with unit L² norm on the grid.
pub fn normalized_gaussian(grid: GridSpec, sig1: f64, sig2: f64) -> QField {
    let g = gaussian(grid, sig1, sig2, Quaternion::ONE);
    let n = g.norm();
    g.scale(1.0 / n)
}

/// Seeded noise, binomially smoothed per axis, under a Gaussian envelope so
/// the field is negligible at the grid boundary.
pub fn random_smooth(grid: GridSpec, sigma_env: f64, seed: u64) -> QField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n1 = grid.n1;
    let n2 = grid.n2;
    let mut comps = vec![[0.0f64; 4]; n1 * n2];
    for c in comps.iter_mut() {
        for v in c.iter_mut() {
            *v = normal(&mut rng);
        }
    }
    let kernel = [1.0 / 16.0, 4.0 / 16.0, 6.0 / 16.0, 4.0 / 16.0, 1.0 / 16.0];
    comps = smooth_axis(&comps, n1, n2, &kernel, true);
    comps = smooth_axis(&comps, n1, n2, &kernel, false);
    let mut f = QField::zero(grid);
    for k1 in 0..n1 {
        let t1 = grid.t1(k1);
        for k2 in 0..n2 {
            let t2 = grid.t2(k2);
            let env =
                (-t1 * t1 / (2.0 * sigma_env * sigma_env) - t2 * t2 / (2.0 * sigma_env * sigma_env))
                    .exp();
            let c = comps[k1 * n2 + k2];
            f.samples[grid.index(k1, k2)] =
                Quaternion::new(c[0], c[1], c[2], c[3]).scale(env);
        }
    }
    f
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; consumes two uniforms per draw
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn smooth_axis(
    comps: &[[f64; 4]],
    n1: usize,
    n2: usize,
    kernel: &[f64; 5],
    along_axis1: bool,
) -> Vec<[f64; 4]> {
    let mut out = vec![[0.0f64; 4]; n1 * n2];
    for k1 in 0..n1 {
        for k2 in 0..n2 {
            let mut acc = [0.0f64; 4];
            for (o, &kv) in kernel.iter().enumerate() {
                let off = o as i64 - 2;
                let (s1, s2) = if along_axis1 {
                    (k1 as i64 + off, k2 as i64)
                } else {
                    (k1 as i64, k2 as i64 + off)
                };
                if s1 < 0 || s1 >= n1 as i64 || s2 < 0 || s2 >= n2 as i64 {
                    continue;
                }
                let src = comps[s1 as usize * n2 + s2 as usize];
                for (a, s) in acc.iter_mut().zip(src.iter()) {
                    *a += kv * s;
                }
            }
            out[k1 * n2 + k2] = acc;
        }
    }
    out
}

//! Digamma evaluation and the constant of the logarithmic bound.

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ψ(x) for x > 0: shift the argument above 16 by the recurrence
/// ψ(x+1) = ψ(x) + 1/x, then sum the asymptotic tail.
pub fn digamma(x: f64) -> f64 {
    assert!(x > 0.0, "digamma evaluated on the positive axis only");
    let mut x = x;
    let mut acc = 0.0;
    while x < 16.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    // Bernoulli-number coefficients of ln' Γ
    let tail = inv2
        * (1.0 / 12.0
            - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
    acc + x.ln() - 0.5 / x - tail
}

/// ψ(1/2) − ln 2, the sharp constant of the logarithmic bound; equals
/// −γ − 3·ln 2 ≈ −2.65666.
pub fn log_constant() -> f64 {
    digamma(0.5) - std::f64::consts::LN_2
}

/// Constants the inequality checks share, evaluated once.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UncertaintyConstants {
    pub d: f64,
}

impl UncertaintyConstants {
    pub fn compute() -> UncertaintyConstants {
        UncertaintyConstants { d: log_constant() }
    }
}

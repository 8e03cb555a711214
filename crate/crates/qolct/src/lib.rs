//! Two-sided offset linear canonical transforms of quaternion fields: a left
//! kernel complex in i, a right kernel complex in j, a windowed variant built
//! on top, and the residual checks that pin down their algebraic behavior.

mod coeff;
mod degenerate;
mod engine;
mod error;
mod freq;
mod kernel;
mod params;
mod plancherel;
mod window;
mod wolct;

pub use coeff::CoeffTensor;
pub use degenerate::{degenerate_freq_grid, qolct_degenerate};
pub use engine::{qolct_forward, qolct_inverse, Provenance, QSpectrum, QolctPlan};
pub use error::QolctError;
pub use freq::FreqGrid;
pub use kernel::{chirp_factor, kernel_left, kernel_phase, kernel_right, SplitUnit};
pub use params::OlctParams;
pub use plancherel::{plancherel_analytic_ratio, plancherel_ratio};
pub use window::WindowSpec;
pub use wolct::{
    analyze, analyze_default, analyze_map_u, check_linearity, check_modulation, check_parity,
    check_time_shift, check_window_shift, coeff_inner, synthesize, ParityReport,
};

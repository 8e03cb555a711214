//! Moment spreads, uncertainty-type inequality checks, and closed-form
//! reference signals for the windowed transform.

mod closed_form;
mod constants;
mod error;
mod gaussian;
mod spread;
mod uncertainty;

pub use closed_form::{chirp_rect_axis_factor, chirp_rect_axis_limit, chirp_rect_coefficient};
pub use constants::{digamma, log_constant, UncertaintyConstants, EULER_GAMMA};
pub use error::AnalysisError;
pub use gaussian::{kernel_cancelling_chirp, make_gaussian, make_rect_window, GaussianSpec, RectWindowSpec};
pub use spread::{
    coefficient_profile, spatial_spread, spatial_spread_centered, spectral_spread,
    spectral_spread_centered, Axis, SpreadProfile,
};
pub use uncertainty::{
    concentration_measure, heisenberg_check, local_moment_check, local_uncertainty_check,
    log_uncertainty_check, sup_bound_check, windowed_spread_check, ConcentrationRegion,
    ConcentrationReport, HeisenbergReport, LocalReport, LogMode, LogReport, SupReport,
};

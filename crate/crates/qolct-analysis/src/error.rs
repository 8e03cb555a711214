use qolct::QolctError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AnalysisError {
    #[error("signal has no energy")]
    ZeroSignal,
    #[error("check requires unit-energy inputs; coefficient energy is {0}")]
    NotNormalized(f64),
    #[error("excluded region has measure {0}; the bound needs measure below 1")]
    MeasureTooLarge(f64),
    #[error("window half-width must be a whole positive number of grid steps")]
    OffGridHalfWidth,
    #[error("removable singularity at w = p; use the axis limit instead")]
    RemovableSingularity,
    #[error(transparent)]
    Transform(#[from] QolctError),
}

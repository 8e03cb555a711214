use quatfield::FieldError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum QolctError {
    #[error("parameter matrix must satisfy ad - bc = 1; got determinant {0}")]
    NotUnimodular(f64),
    #[error("axis has degenerate b; use the degenerate branch")]
    DegenerateB,
    #[error("degenerate branch requires d > 0; got {0}")]
    NegativeD(f64),
    #[error("operation requires the aligned frequency grid")]
    UnalignedGrid,
    #[error("degenerate resample target does not land on the sampling grid")]
    OffGridResample,
    #[error("signal is identically zero")]
    ZeroSignal,
    #[error("window is identically zero")]
    ZeroWindow,
    #[error("covariance target is not representable on the grid")]
    OffGridTarget,
    #[error("window overlap is numerically zero; synthesis is ill-posed")]
    NonInvertibleWindowPair,
    #[error("coefficient tensors live on different grids")]
    TensorMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

//! Window functions for the sliding-window transform.

use crate::QolctError;
use quatfield::QField;

/// Nonzero window with its norm cached.
#[derive(Clone, Debug)]
pub struct WindowSpec {
    pub g: QField,
    norm: f64,
}

impl WindowSpec {
    pub fn new(g: QField) -> Result<WindowSpec, QolctError> {
        let norm = g.norm();
        if norm == 0.0 {
            return Err(QolctError::ZeroWindow);
        }
        Ok(WindowSpec { g, norm })
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn norm_sqr(&self) -> f64 {
        self.norm * self.norm
    }
}

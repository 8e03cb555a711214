//! Quaternion scalars and quaternion-valued fields sampled on uniform 2D grids.

mod field;
mod grid;
mod quat;
mod sum;
pub mod synth;

pub use field::{FieldError, QField};
pub use grid::GridSpec;
pub use quat::{qinner, ComplexPair, Quaternion};
pub use sum::{pairwise_sum, pairwise_sum_by, PairwiseAdd};

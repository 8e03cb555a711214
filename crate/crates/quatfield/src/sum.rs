//! Deterministic pairwise reductions; every quadrature sum in the workspace
//! goes through these so results are independent of thread count.

use crate::Quaternion;
use num_complex::Complex64;

pub trait PairwiseAdd: Copy {
    const ADD_ZERO: Self;
    fn pw_add(self, other: Self) -> Self;
}

impl PairwiseAdd for f64 {
    const ADD_ZERO: f64 = 0.0;
    fn pw_add(self, other: f64) -> f64 {
        self + other
    }
}

impl PairwiseAdd for Complex64 {
    const ADD_ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
    fn pw_add(self, other: Complex64) -> Complex64 {
        self + other
    }
}

impl PairwiseAdd for Quaternion {
    const ADD_ZERO: Quaternion = Quaternion::ZERO;
    fn pw_add(self, other: Quaternion) -> Quaternion {
        self + other
    }
}

const LEAF: usize = 32;

/// Pairwise (tree) sum of a slice.
pub fn pairwise_sum<T: PairwiseAdd>(xs: &[T]) -> T {
    if xs.len() <= LEAF {
        let mut acc = T::ADD_ZERO;
        for &x in xs {
            acc = acc.pw_add(x);
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]).pw_add(pairwise_sum(&xs[mid..]))
}

/// Pairwise sum of f(0), ..., f(len-1) without materializing the terms.
pub fn pairwise_sum_by<T, F>(len: usize, f: &mut F) -> T
where
    T: PairwiseAdd,
    F: FnMut(usize) -> T,
{
    fn go<T: PairwiseAdd, F: FnMut(usize) -> T>(start: usize, len: usize, f: &mut F) -> T {
        if len <= LEAF {
            let mut acc = T::ADD_ZERO;
            for i in start..start + len {
                acc = acc.pw_add(f(i));
            }
            return acc;
        }
        let half = len / 2;
        let left = go(start, half, f);
        left.pw_add(go(start + half, len - half, f))
    }
    go(0, len, f)
}

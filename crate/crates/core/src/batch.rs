//! Batch evaluation over independent samples.
//!
//! With the `parallel` feature (on by default) the `*_parallel` entry points
//! run on the rayon pool; without it they fall back to the sequential
//! versions. Results are always returned in sample order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Result;
use crate::group::Matrix3;
use crate::reduction::{decompose, ReductionConfig, ReductionTrace};
use crate::ring::RingTag;

pub fn map_indexed_sequential<T, F>(count: u64, f: F) -> Vec<T>
where
    F: Fn(u64) -> T,
{
    (0..count).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_indexed_parallel<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed_parallel<T, F>(count: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    map_indexed_sequential(count, f)
}

pub fn decompose_all_sequential(
    matrices: &[Matrix3],
    tag: RingTag,
    config: &ReductionConfig,
) -> Vec<Result<ReductionTrace>> {
    matrices.iter().map(|g| decompose(g, tag, config)).collect()
}

#[cfg(feature = "parallel")]
pub fn decompose_all_parallel(
    matrices: &[Matrix3],
    tag: RingTag,
    config: &ReductionConfig,
) -> Vec<Result<ReductionTrace>> {
    matrices
        .par_iter()
        .map(|g| decompose(g, tag, config))
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn decompose_all_parallel(
    matrices: &[Matrix3],
    tag: RingTag,
    config: &ReductionConfig,
) -> Vec<Result<ReductionTrace>> {
    decompose_all_sequential(matrices, tag, config)
}

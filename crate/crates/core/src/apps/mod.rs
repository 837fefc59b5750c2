//! Downstream uses of the max-hash map, each next to its brute-force oracle.

mod cluster;
mod diameter;
mod estimator;
mod maxcut;

pub use cluster::{
    basic_cost_with, clustering_cost, enumerate_clusterings, random_clustering, Centers, Clustering, Objective,
};
pub use diameter::{
    diameter_exact, diameter_l1, diameter_linf_stream, diameter_projected, projected_buckets,
    L1DiameterStream, LinfDiameterStream, L1_MAX_DIMS,
};
pub use estimator::DistanceEstimator;
pub use maxcut::{
    cut_value, maxcut_brute, maxcut_sketched, maxcut_weights, maxcut_with_map, sketch_buckets,
    Cut, SketchedCut, MAXCUT_MAX_POINTS,
};

use crate::{Error, Result, SparseVector};

pub(crate) fn check_same_dim(xs: &[SparseVector]) -> Result<()> {
    if let Some(first) = xs.first() {
        xs.iter().try_for_each(|x| first.check_dim(x))?;
    }
    Ok(())
}

pub(crate) fn check_nonneg(xs: &[SparseVector]) -> Result<()> {
    xs.iter().try_for_each(SparseVector::require_nonneg)
}

pub(crate) fn need_points(xs: &[SparseVector], needed: usize) -> Result<()> {
    if xs.len() < needed {
        return Err(Error::TooFewPoints { needed, got: xs.len() });
    }
    Ok(())
}

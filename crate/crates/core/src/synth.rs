//! Seeded synthetic datasets.

use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;

use crate::hash::rng;
use crate::{Error, Result, SparseVector};

fn support<R: Rng>(rng: &mut R, dim: u64, s: usize) -> Result<Vec<u64>> {
    if s as u64 > dim {
        return Err(Error::param("sparsity exceeds dimension"));
    }
    let dim = usize::try_from(dim).map_err(|_| Error::param("dimension exceeds usize"))?;
    Ok(index::sample(rng, dim, s).into_iter().map(|i| i as u64).collect())
}

/// `n` vectors with exactly `s` non-zeros at uniform distinct positions and
/// values uniform in `(0, 1]`.
pub fn random_nonneg(n: usize, s: usize, dim: u64, seed: u64) -> Result<Vec<SparseVector>> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let idx = support(&mut rng, dim, s)?;
            let entries: Vec<(u64, f64)> =
                idx.into_iter().map(|i| (i, 1.0 - rng.random::<f64>())).collect();
            SparseVector::new(dim, entries)
        })
        .collect()
}

/// `n` vectors with exactly `s` non-zeros drawn uniformly from
/// `{-delta, ..., delta} \ {0}`.
pub fn random_discrete(
    n: usize,
    s: usize,
    dim: u64,
    delta: u32,
    seed: u64,
) -> Result<Vec<SparseVector>> {
    if delta == 0 {
        return Err(Error::param("delta must be at least 1"));
    }
    let delta = i64::from(delta);
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            let idx = support(&mut rng, dim, s)?;
            let entries: Vec<(u64, f64)> = idx
                .into_iter()
                .map(|i| {
                    let mag = rng.random_range(1..=delta);
                    let v = if rng.random::<bool>() { mag } else { -mag };
                    (i, v as f64)
                })
                .collect();
            SparseVector::new(dim, entries)
        })
        .collect()
}

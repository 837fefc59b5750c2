use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::hash::rng;
use crate::{Error, Result, SparseVector};

/// Random sparse vectors: a uniform `t`-subset of `[d]` holding iid
/// `N(0, r)` values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnifSpec {
    pub t: usize,
    /// Variance of each non-zero entry.
    pub r: f64,
    pub d: u64,
    pub seed: u64,
}

impl UnifSpec {
    pub fn validate(&self) -> Result<()> {
        if self.t == 0 {
            return Err(Error::param("t must be at least 1"));
        }
        if self.t as u64 > self.d {
            return Err(Error::param(alloc::format!("t = {} exceeds d = {}", self.t, self.d)));
        }
        if !(self.r > 0.0 && self.r.is_finite()) {
            return Err(Error::param("r must be positive"));
        }
        if usize::try_from(self.d).is_err() {
            return Err(Error::param("d exceeds usize"));
        }
        Ok(())
    }
}

/// Stream of draws; the same seed always yields the same stream.
pub struct UnifSampler {
    spec: UnifSpec,
    sd: f64,
    rng: ChaCha8Rng,
}

impl UnifSampler {
    pub fn new(spec: UnifSpec) -> Result<Self> {
        spec.validate()?;
        Ok(UnifSampler { spec, sd: libm::sqrt(spec.r), rng: rng(spec.seed) })
    }

    pub fn sample(&mut self) -> SparseVector {
        let d = self.spec.d as usize;
        let idx = index::sample(&mut self.rng, d, self.spec.t);
        let entries: Vec<(u64, f64)> = idx
            .into_iter()
            .map(|i| {
                let z: f64 = self.rng.sample(StandardNormal);
                (i as u64, self.sd * z)
            })
            .collect();
        SparseVector::new(self.spec.d, entries).expect("distinct in-range indices")
    }
}

impl Iterator for UnifSampler {
    type Item = SparseVector;

    fn next(&mut self) -> Option<SparseVector> {
        Some(self.sample())
    }
}

/// First draw of the stream for `spec`.
pub fn sample_unif(spec: &UnifSpec) -> Result<SparseVector> {
    Ok(UnifSampler::new(*spec)?.sample())
}

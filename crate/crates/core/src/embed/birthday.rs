use alloc::vec;
use alloc::vec::Vec;

use crate::hash::{BucketHasher, HashSpec};
use crate::SparseVector;

/// Linear sum-hash map: each coordinate lands in one of `m` buckets and the
/// bucket holds the sum of everything that landed there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirthdayMap {
    spec: HashSpec,
    hasher: BucketHasher,
}

impl BirthdayMap {
    pub fn new(spec: HashSpec) -> Self {
        BirthdayMap { spec, hasher: spec.hasher() }
    }

    pub fn spec(&self) -> &HashSpec {
        &self.spec
    }

    pub fn m(&self) -> u64 {
        self.spec.m
    }

    pub fn bucket(&self, j: u64) -> u64 {
        self.hasher.bucket(j)
    }

    pub fn embed(&self, x: &SparseVector) -> Vec<f64> {
        let mut out = vec![0.0; self.spec.m as usize];
        for (j, v) in x.iter() {
            out[self.hasher.bucket(j) as usize] += v;
        }
        out
    }
}

pub fn birthday_embed(map: &BirthdayMap, x: &SparseVector) -> Vec<f64> {
    map.embed(x)
}

use alloc::vec;
use alloc::vec::Vec;

use crate::hash::{BucketHasher, HashSpec};
use crate::norm::root;
use crate::{Error, Norm, Result, SparseVector};

/// Max-pooling bucket map `f: R^d -> R^m`.
///
/// Bucket `i` holds the largest support value hashed to `i`, or 0 when no
/// support coordinate landed there. For non-negative inputs the map never
/// expands any `l_p` distance. Negative inputs are accepted but carry no
/// guarantee: `{0: -1}` and `{1: 1}` sharing a bucket end up at distance 2
/// although they are at `l_inf` distance 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxHashMap {
    spec: HashSpec,
    hasher: BucketHasher,
}

/// Non-empty buckets of `f(x)`, sorted by bucket.
pub type SparseImage = Vec<(u64, f64)>;

impl MaxHashMap {
    pub fn new(spec: HashSpec) -> Self {
        MaxHashMap { spec, hasher: spec.hasher() }
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

    /// Dense `f(x)` of length `m`.
    pub fn embed(&self, x: &SparseVector) -> Vec<f64> {
        let mut out = vec![0.0; self.spec.m as usize];
        for (b, v) in self.image(x) {
            out[b as usize] = v;
        }
        out
    }

    pub fn image(&self, x: &SparseVector) -> SparseImage {
        let mut img = Vec::with_capacity(x.nnz());
        image_into(&self.hasher, x, &mut img);
        img
    }

    /// True iff no two coordinates of the union support share a bucket.
    pub fn is_injective_on(&self, xs: &[&SparseVector]) -> bool {
        let mut idx: Vec<u64> = xs.iter().flat_map(|x| x.indices().iter().copied()).collect();
        idx.sort_unstable();
        idx.dedup();
        let mut buckets: Vec<u64> = idx.iter().map(|&j| self.hasher.bucket(j)).collect();
        buckets.sort_unstable();
        buckets.windows(2).all(|w| w[0] != w[1])
    }

    /// `||f(x) - f(y)||` in the given norm.
    pub fn embedded_distance(&self, x: &SparseVector, y: &SparseVector, norm: Norm) -> Result<f64> {
        x.check_dim(y)?;
        let (a, b) = (self.image(x), self.image(y));
        Ok(image_distance(&a, &b, norm))
    }
}

pub(crate) fn image_into(hasher: &BucketHasher, x: &SparseVector, img: &mut SparseImage) {
    img.clear();
    img.extend(x.iter().map(|(j, v)| (hasher.bucket(j), v)));
    img.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    // keep the last (largest) value of each bucket run
    img.dedup_by(|later, earlier| {
        if later.0 == earlier.0 {
            earlier.1 = later.1;
            true
        } else {
            false
        }
    });
}

/// Sum of `|a_b - b_b|^p` over buckets for finite `p`, max for `Inf`.
pub(crate) fn image_power(a: &[(u64, f64)], b: &[(u64, f64)], norm: Norm) -> f64 {
    let mut acc = 0.0f64;
    let mut add = |d: f64| match norm {
        Norm::Inf => acc = acc.max(libm::fabs(d)),
        _ => acc += norm.pow_abs(d),
    };
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ba, va)), Some(&(bb, vb))) => {
                if ba == bb {
                    add(va - vb);
                    i += 1;
                    j += 1;
                } else if ba < bb {
                    add(va);
                    i += 1;
                } else {
                    add(vb);
                    j += 1;
                }
            }
            (Some(&(_, va)), None) => {
                add(va);
                i += 1;
            }
            (None, Some(&(_, vb))) => {
                add(vb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    acc
}

pub(crate) fn image_distance(a: &[(u64, f64)], b: &[(u64, f64)], norm: Norm) -> f64 {
    let raw = image_power(a, b, norm);
    match norm {
        Norm::P(e) => root(raw, e.get()),
        Norm::Inf => raw,
    }
}

/// `max_embed(map, x)`: dense `f(x)`.
pub fn max_embed(map: &MaxHashMap, x: &SparseVector) -> Vec<f64> {
    map.embed(x)
}

impl From<HashSpec> for MaxHashMap {
    fn from(spec: HashSpec) -> Self {
        MaxHashMap::new(spec)
    }
}

pub(crate) fn check_len(len: usize, expected: u64) -> Result<()> {
    if len as u64 != expected {
        return Err(Error::DimensionMismatch { left: expected, right: len as u64 });
    }
    Ok(())
}

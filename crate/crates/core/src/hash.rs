//! Seeded bucket hashing and seed derivation.
//!
//! Every random function `h: [d] -> [m]` in the crate is a keyed 64-bit
//! mixer reduced mod `m`, so no table proportional to `d` is ever stored and
//! the same `(seed, copy_index, m)` gives the same function in every process.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Identifies one hash function `h: [d] -> [m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HashSpec {
    pub seed: u64,
    pub copy_index: u64,
    /// Bucket count, at least 1.
    pub m: u64,
}

impl HashSpec {
    pub fn new(seed: u64, copy_index: u64, m: u64) -> Self {
        assert!(m >= 1, "bucket count must be positive");
        HashSpec { seed, copy_index, m }
    }

    pub fn hasher(&self) -> BucketHasher {
        let key = mix64(self.seed ^ mix64(self.copy_index.wrapping_add(1).wrapping_mul(GOLDEN)));
        BucketHasher { key, m: self.m }
    }

    pub fn bucket(&self, j: u64) -> u64 {
        self.hasher().bucket(j)
    }
}

/// A `HashSpec` with its key precomputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucketHasher {
    key: u64,
    m: u64,
}

impl BucketHasher {
    #[inline]
    pub fn bucket(&self, j: u64) -> u64 {
        if self.m == 1 {
            return 0;
        }
        mix64(mix64(j ^ self.key).wrapping_add(self.key)) % self.m
    }

    pub fn buckets(&self) -> u64 {
        self.m
    }
}

/// `hash_bucket(spec, j)`.
pub fn hash_bucket(spec: &HashSpec, j: u64) -> u64 {
    spec.bucket(j)
}

/// Derive an independent seed for `(purpose, index)` from a root seed.
///
/// FNV-1a over the tag, then two mixing rounds.
pub fn derive_seed(seed: u64, purpose: &str, index: u64) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in purpose.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    mix64(mix64(seed ^ h).wrapping_add(index.wrapping_mul(GOLDEN)))
}

/// Seeded generator used for every sampled quantity in the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = HashSpec::new(42, 3, 1000);
        assert_eq!(spec.bucket(17), spec.bucket(17));
        assert_eq!(hash_bucket(&spec, 17), HashSpec::new(42, 3, 1000).bucket(17));
    }

    #[test]
    fn single_bucket() {
        let spec = HashSpec::new(9, 0, 1);
        for j in [0, 1, 17, u64::MAX] {
            assert_eq!(spec.bucket(j), 0);
        }
    }

    #[test]
    fn frozen_values() {
        // Cross-process determinism: these values must never change.
        let spec = HashSpec::new(1, 0, 1 << 20);
        let got: [u64; 3] = [spec.bucket(0), spec.bucket(1), spec.bucket(123_456_789)];
        assert_eq!(got, FROZEN);
    }
    const FROZEN: [u64; 3] = [164388, 337427, 381821];

    #[test]
    fn copies_differ() {
        let a = HashSpec::new(5, 0, 1 << 30);
        let b = HashSpec::new(5, 1, 1 << 30);
        let same = (0..1000).filter(|&j| a.bucket(j) == b.bucket(j)).count();
        assert!(same < 5);
    }

    #[test]
    fn near_uniform_buckets() {
        let n = 100_000u64;
        let m = 16u64;
        let spec = HashSpec::new(2024, 0, m);
        let mut counts = [0u64; 16];
        for j in 0..n {
            counts[spec.bucket(j) as usize] += 1;
        }
        let p = 1.0 / m as f64;
        let mean = n as f64 * p;
        let sigma = libm::sqrt(n as f64 * p * (1.0 - p));
        for c in counts {
            assert!((c as f64 - mean).abs() <= 5.0 * sigma, "{counts:?}");
        }
        // chi-square with 15 degrees of freedom; 0.9999 quantile is about 44.3
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - mean).powi(2) / mean).sum();
        assert!(chi2 < 44.3, "chi2 = {chi2}");
    }

    #[test]
    fn derived_seeds_differ_by_tag_and_index() {
        assert_ne!(derive_seed(1, "data", 0), derive_seed(1, "hash", 0));
        assert_ne!(derive_seed(1, "data", 0), derive_seed(1, "data", 1));
        assert_eq!(derive_seed(1, "data", 7), derive_seed(1, "data", 7));
    }
}

use alloc::vec;
use alloc::vec::Vec;

use super::maxhash::{check_len, image_into, image_power, SparseImage};
use super::pairwise::{self, PairwiseSums};
use super::{EmbedParams, MaxHashMap};
use crate::hash::{BucketHasher, HashSpec};
use crate::norm::root;
use crate::{Norm, Result, SparseVector};

/// `T` independent max-hash maps sharing a seed, concatenated.
///
/// Copy `k` uses `HashSpec { seed, copy_index: k, m }`. Distances are
/// computed from the sparse per-copy images, so `m * T` may be far larger
/// than anything one would materialize; `embed` produces the dense output
/// when it is actually wanted.
#[derive(Debug, Clone, PartialEq)]
pub struct StackedEmbedding {
    params: EmbedParams,
    seed: u64,
    hashers: Vec<BucketHasher>,
}

impl StackedEmbedding {
    pub fn new(params: EmbedParams, seed: u64) -> Self {
        let hashers =
            (0..params.copies).map(|k| HashSpec::new(seed, k, params.m).hasher()).collect();
        StackedEmbedding { params, seed, hashers }
    }

    pub fn params(&self) -> &EmbedParams {
        &self.params
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn m(&self) -> u64 {
        self.params.m
    }

    /// `T`.
    pub fn copies(&self) -> u64 {
        self.params.copies
    }

    pub fn output_dim(&self) -> u64 {
        self.params.output_dim()
    }

    /// Base map number `k`.
    pub fn map(&self, k: u64) -> MaxHashMap {
        MaxHashMap::new(HashSpec::new(self.seed, k, self.params.m))
    }

    pub(crate) fn hashers(&self) -> &[BucketHasher] {
        &self.hashers
    }

    /// Dense `F(x)`: copy 0's `m` buckets, then copy 1's, and so on.
    pub fn embed(&self, x: &SparseVector) -> Vec<f64> {
        let m = self.params.m as usize;
        let mut out = vec![0.0; m * self.hashers.len()];
        let mut img = Vec::new();
        for (k, h) in self.hashers.iter().enumerate() {
            image_into(h, x, &mut img);
            for &(b, v) in &img {
                out[k * m + b as usize] = v;
            }
        }
        out
    }

    /// Per-copy sparse images of `x`.
    pub fn images(&self, x: &SparseVector) -> Vec<SparseImage> {
        self.hashers
            .iter()
            .map(|h| {
                let mut img = Vec::with_capacity(x.nnz());
                image_into(h, x, &mut img);
                img
            })
            .collect()
    }

    /// `sum_k ||f_k(x) - f_k(y)||_p^p` for finite `p`, `max_k ||f_k(x) - f_k(y)||_inf`
    /// for `Inf`.
    pub fn power_sum(&self, x: &SparseVector, y: &SparseVector, norm: Norm) -> Result<f64> {
        x.check_dim(y)?;
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut acc = 0.0f64;
        for h in &self.hashers {
            image_into(h, x, &mut a);
            image_into(h, y, &mut b);
            let part = image_power(&a, &b, norm);
            acc = match norm {
                Norm::Inf => acc.max(part),
                Norm::P(_) => acc + part,
            };
        }
        Ok(acc)
    }

    /// Distance estimate: `(||F(x)-F(y)||_p^p / T)^(1/p)`, or the plain
    /// `||F(x)-F(y)||_inf`.
    ///
    /// For non-negative inputs this never exceeds `||x - y||_p`.
    pub fn estimate_distance(&self, x: &SparseVector, y: &SparseVector, norm: Norm) -> Result<f64> {
        let raw = self.power_sum(x, y, norm)?;
        Ok(self.finish(raw, norm))
    }

    /// Same estimate from two precomputed image lists.
    pub fn distance_from_images(&self, a: &[SparseImage], b: &[SparseImage], norm: Norm) -> f64 {
        debug_assert_eq!(a.len(), self.hashers.len());
        debug_assert_eq!(b.len(), self.hashers.len());
        let raw = a.iter().zip(b).fold(0.0f64, |acc, (ia, ib)| {
            let part = image_power(ia, ib, norm);
            match norm {
                Norm::Inf => acc.max(part),
                Norm::P(_) => acc + part,
            }
        });
        self.finish(raw, norm)
    }

    /// Distance estimate between two dense outputs of [`embed`](Self::embed).
    pub fn distance_between(&self, a: &[f64], b: &[f64], norm: Norm) -> Result<f64> {
        check_len(a.len(), self.output_dim())?;
        check_len(b.len(), self.output_dim())?;
        let raw = match norm {
            Norm::Inf => a.iter().zip(b).fold(0.0f64, |acc, (u, v)| acc.max(libm::fabs(u - v))),
            Norm::P(_) => a.iter().zip(b).map(|(u, v)| norm.pow_abs(u - v)).sum(),
        };
        Ok(self.finish(raw, norm))
    }

    fn finish(&self, raw: f64, norm: Norm) -> f64 {
        match norm {
            Norm::Inf => raw,
            Norm::P(e) => root(raw / self.copies() as f64, e.get()),
        }
    }

    /// Norm of the sum: `max_k ||f_k(x) + f_k(y)||_inf` for `Inf`, otherwise
    /// `(sum_k ||f_k(x) + f_k(y)||_p^p / T)^(1/p)`.
    ///
    /// With `m = T = 1` and `Inf` this is `max(x) + max(y)`, which lies in
    /// `[||x+y||_inf, 2 ||x+y||_inf]`. Both inputs must be non-negative.
    pub fn estimate_sum_norm(&self, x: &SparseVector, y: &SparseVector, norm: Norm) -> Result<f64> {
        x.check_dim(y)?;
        x.require_nonneg()?;
        y.require_nonneg()?;
        let (mut a, mut b) = (Vec::new(), Vec::new());
        let mut acc = 0.0f64;
        for h in &self.hashers {
            image_into(h, x, &mut a);
            image_into(h, y, &mut b);
            let part = image_sum_power(&a, &b, norm);
            acc = match norm {
                Norm::Inf => acc.max(part),
                Norm::P(_) => acc + part,
            };
        }
        Ok(self.finish(acc, norm))
    }

    /// Exact per-pair power sums for a whole dataset.
    ///
    /// Equivalent to calling [`power_sum`](Self::power_sum) on every pair
    /// for every exponent, but only visits buckets where two support
    /// coordinates collide.
    pub fn pairwise(&self, xs: &[SparseVector], exponents: &[f64]) -> Result<PairwiseSums> {
        pairwise::compute(self, xs, exponents)
    }
}

fn image_sum_power(a: &[(u64, f64)], b: &[(u64, f64)], norm: Norm) -> f64 {
    let mut acc = 0.0f64;
    let mut add = |v: f64| match norm {
        Norm::Inf => acc = acc.max(libm::fabs(v)),
        Norm::P(_) => acc += norm.pow_abs(v),
    };
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(ba, va)), Some(&(bb, vb))) if ba == bb => {
                add(va + vb);
                i += 1;
                j += 1;
            }
            (Some(&(ba, va)), Some(&(bb, _))) if ba < bb => {
                add(va);
                i += 1;
            }
            (Some(&(_, va)), None) => {
                add(va);
                i += 1;
            }
            (_, Some(&(_, vb))) => {
                add(vb);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    acc
}

/// `stack_embed(F, x)`: dense `F(x)` of length `m * T`.
pub fn stack_embed(f: &StackedEmbedding, x: &SparseVector) -> Vec<f64> {
    f.embed(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::max_embed;
    use crate::{plan_params, Mode};

    fn v(d: u64, e: &[(u64, f64)]) -> SparseVector {
        SparseVector::new(d, e.iter().copied()).unwrap()
    }

    #[test]
    fn single_copy_equals_base_map() {
        let f = StackedEmbedding::new(EmbedParams::custom(5, 1).unwrap(), 3);
        let x = v(100, &[(1, 0.5), (9, 2.0), (44, 1.0)]);
        assert_eq!(f.embed(&x), max_embed(&f.map(0), &x));
    }

    #[test]
    fn copies_concatenate_in_order() {
        let f = StackedEmbedding::new(EmbedParams::custom(4, 2).unwrap(), 8);
        let x = v(100, &[(1, 0.5), (9, 2.0), (44, 1.0)]);
        let out = f.embed(&x);
        assert_eq!(out.len(), 8);
        assert_eq!(&out[..4], &max_embed(&f.map(0), &x)[..]);
        assert_eq!(&out[4..], &max_embed(&f.map(1), &x)[..]);
        assert_ne!(f.map(0).spec(), f.map(1).spec());
    }

    #[test]
    fn zero_vector_embeds_to_zero() {
        let f = StackedEmbedding::new(EmbedParams::custom(3, 4).unwrap(), 1);
        assert_eq!(f.embed(&SparseVector::zeros(10)), vec![0.0; 12]);
    }

    #[test]
    fn identical_inputs_have_zero_distance() {
        let f = StackedEmbedding::new(EmbedParams::custom(3, 4).unwrap(), 1);
        let x = v(10, &[(2, 1.0), (3, 4.0)]);
        for norm in [Norm::L1, Norm::Inf] {
            assert_eq!(f.estimate_distance(&x, &x, norm).unwrap(), 0.0);
        }
    }

    #[test]
    fn dense_and_sparse_routes_agree() {
        let f = StackedEmbedding::new(EmbedParams::custom(6, 5).unwrap(), 21);
        let x = v(50, &[(2, 1.0), (3, 4.0), (17, 0.5), (40, 2.5)]);
        let y = v(50, &[(3, 1.0), (8, 2.0), (40, 0.5)]);
        let (ex, ey) = (f.embed(&x), f.embed(&y));
        for norm in [Norm::L1, Norm::L2, Norm::p(3.0).unwrap(), Norm::Inf] {
            let a = f.estimate_distance(&x, &y, norm).unwrap();
            let b = f.distance_between(&ex, &ey, norm).unwrap();
            let c = f.distance_from_images(&f.images(&x), &f.images(&y), norm);
            assert!((a - b).abs() <= 1e-12 * a.max(1.0));
            assert!((a - c).abs() <= 1e-12 * a.max(1.0));
        }
        assert!(f.distance_between(&ex[1..], &ey, Norm::L1).is_err());
    }

    #[test]
    fn single_copy_injective_is_exact() {
        let x = v(1000, &[(2, 1.0), (3, 4.0), (17, 0.5)]);
        let y = v(1000, &[(3, 1.0), (800, 2.0)]);
        let seed = (0..)
            .find(|&s| MaxHashMap::new(HashSpec::new(s, 0, 64)).is_injective_on(&[&x, &y]))
            .unwrap();
        let f = StackedEmbedding::new(EmbedParams::custom(64, 1).unwrap(), seed);
        let t = x.distance(&y, Norm::L2).unwrap();
        assert!((f.estimate_distance(&x, &y, Norm::L2).unwrap() - t).abs() <= 1e-12 * t);
    }

    #[test]
    fn sum_norm_examples() {
        let params = plan_params(Mode::SumLinf, 2, 2, 0.5, None, None).unwrap();
        let f = StackedEmbedding::new(params, 0);
        let e0 = v(4, &[(0, 1.0)]);
        let e1 = v(4, &[(1, 1.0)]);
        assert_eq!(f.estimate_sum_norm(&e0, &e0, Norm::Inf).unwrap(), 2.0);
        assert_eq!(e0.add(&e0).unwrap().norm(Norm::Inf), 2.0);
        assert_eq!(f.estimate_sum_norm(&e0, &e1, Norm::Inf).unwrap(), 2.0);
        assert_eq!(e0.add(&e1).unwrap().norm(Norm::Inf), 1.0);
        let z = SparseVector::zeros(4);
        assert_eq!(f.estimate_sum_norm(&z, &z, Norm::Inf).unwrap(), 0.0);
        let neg = v(4, &[(2, -1.0)]);
        assert!(f.estimate_sum_norm(&e0, &neg, Norm::Inf).is_err());
    }
}

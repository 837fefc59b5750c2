use alloc::vec;
use alloc::vec::Vec;

use super::{check_nonneg, check_same_dim, need_points};
use crate::embed::{MaxHashMap, SparseImage};
use crate::hash::HashSpec;
use crate::{Error, Norm, Result, SparseVector};

/// Largest projected dimension for the `l_1` sign-pattern stream.
pub const L1_MAX_DIMS: u32 = 24;

/// `max_{x,y} ||x - y||` by scanning all pairs.
pub fn diameter_exact(xs: &[SparseVector], norm: Norm) -> Result<f64> {
    need_points(xs, 2)?;
    check_same_dim(xs)?;
    let mut best = 0.0f64;
    for (i, x) in xs.iter().enumerate() {
        for y in &xs[i + 1..] {
            best = best.max(x.distance(y, norm)?);
        }
    }
    Ok(best)
}

/// Buckets for the projected diameter: `200 s^2` makes the union support of
/// one fixed pair collision-free with probability at least 0.99.
pub fn projected_buckets(s: usize) -> u64 {
    200 * (s.max(1) as u64).pow(2)
}

/// Diameter of `{f(x)}` for one max-hash map with `m` buckets, by scanning
/// all projected pairs. Never above the true diameter for non-negative
/// input.
pub fn diameter_projected(xs: &[SparseVector], norm: Norm, m: u64, seed: u64) -> Result<f64> {
    need_points(xs, 2)?;
    check_same_dim(xs)?;
    check_nonneg(xs)?;
    let map = MaxHashMap::new(HashSpec::new(seed, 0, m));
    let images: Vec<SparseImage> = xs.iter().map(|x| map.image(x)).collect();
    let mut best = 0.0f64;
    for (i, a) in images.iter().enumerate() {
        for b in &images[i + 1..] {
            best = best.max(crate::embed::maxhash_image_distance(a, b, norm));
        }
    }
    Ok(best)
}

/// One-pass `l_inf` diameter in `O(m)` words.
///
/// Each vector is hashed into `m` buckets; per bucket the running maximum
/// and minimum of the projected coordinate are kept. The diameter is the
/// largest spread. A bucket some vector left empty has that vector's
/// coordinate at 0, which is then the minimum since inputs are
/// non-negative.
#[derive(Debug, Clone)]
pub struct LinfDiameterStream {
    map: MaxHashMap,
    dim: Option<u64>,
    seen: u64,
    maxes: Vec<f64>,
    mins: Vec<f64>,
    touches: Vec<u64>,
    img: SparseImage,
}

impl LinfDiameterStream {
    pub fn new(m: u64, seed: u64) -> Self {
        let len = m as usize;
        LinfDiameterStream {
            map: MaxHashMap::new(HashSpec::new(seed, 0, m)),
            dim: None,
            seen: 0,
            maxes: vec![0.0; len],
            mins: vec![f64::INFINITY; len],
            touches: vec![0; len],
            img: Vec::new(),
        }
    }

    /// `m = 100 s`.
    pub fn for_sparsity(s: usize, seed: u64) -> Self {
        LinfDiameterStream::new(100 * s.max(1) as u64, seed)
    }

    pub fn push(&mut self, x: &SparseVector) -> Result<()> {
        match self.dim {
            Some(d) if d != x.dim() => {
                return Err(Error::DimensionMismatch { left: d, right: x.dim() })
            }
            _ => self.dim = Some(x.dim()),
        }
        x.require_nonneg()?;
        self.img = self.map.image(x);
        for &(b, v) in &self.img {
            let b = b as usize;
            self.maxes[b] = self.maxes[b].max(v);
            self.mins[b] = self.mins[b].min(v);
            self.touches[b] += 1;
        }
        self.seen += 1;
        Ok(())
    }

    pub fn diameter(&self) -> f64 {
        let mut best = 0.0f64;
        for b in 0..self.maxes.len() {
            let min = if self.touches[b] < self.seen { 0.0 } else { self.mins[b] };
            if self.touches[b] > 0 {
                best = best.max(self.maxes[b] - min);
            }
        }
        best
    }

    /// Words of state, excluding the per-vector scratch image.
    pub fn memory_words(&self) -> usize {
        self.maxes.len() + self.mins.len() + self.touches.len()
    }
}

/// Stream `xs` through [`LinfDiameterStream::for_sparsity`].
pub fn diameter_linf_stream<'a, I>(xs: I, s: usize, seed: u64) -> Result<f64>
where
    I: IntoIterator<Item = &'a SparseVector>,
{
    let mut st = LinfDiameterStream::for_sparsity(s, seed);
    for x in xs {
        st.push(x)?;
    }
    Ok(st.diameter())
}

/// One-pass `l_1` diameter: project to `k` buckets, then track the running
/// max and min of `<sigma, f(x)>` for every sign pattern `sigma` in
/// `{±1}^k` with its first sign fixed (the other half are negations).
/// `||z||_1 = max_sigma <sigma, z>`, so the largest spread is the projected
/// `l_1` diameter. Patterns are visited in Gray-code order, one flip each.
#[derive(Debug, Clone)]
pub struct L1DiameterStream {
    map: MaxHashMap,
    k: u32,
    dim: Option<u64>,
    maxes: Vec<f64>,
    mins: Vec<f64>,
    seen: u64,
}

impl L1DiameterStream {
    pub fn new(k: u32, seed: u64) -> Result<Self> {
        if k == 0 || k > L1_MAX_DIMS {
            return Err(Error::TooLarge { what: "projected l1 dimension", value: k as u64, limit: L1_MAX_DIMS as u64 });
        }
        let patterns = 1usize << (k - 1);
        Ok(L1DiameterStream {
            map: MaxHashMap::new(HashSpec::new(seed, 0, k as u64)),
            k,
            dim: None,
            maxes: vec![f64::NEG_INFINITY; patterns],
            mins: vec![f64::INFINITY; patterns],
            seen: 0,
        })
    }

    pub fn push(&mut self, x: &SparseVector) -> Result<()> {
        match self.dim {
            Some(d) if d != x.dim() => {
                return Err(Error::DimensionMismatch { left: d, right: x.dim() })
            }
            _ => self.dim = Some(x.dim()),
        }
        x.require_nonneg()?;
        let y = self.map.embed(x);
        let mut signs = vec![1.0f64; self.k as usize];
        let mut v: f64 = y.iter().sum();
        for g in 0..self.maxes.len() {
            if g > 0 {
                let b = g.trailing_zeros() as usize + 1;
                v -= 2.0 * signs[b] * y[b];
                signs[b] = -signs[b];
            }
            self.maxes[g] = self.maxes[g].max(v);
            self.mins[g] = self.mins[g].min(v);
        }
        self.seen += 1;
        Ok(())
    }

    pub fn diameter(&self) -> f64 {
        if self.seen == 0 {
            return 0.0;
        }
        self.maxes.iter().zip(&self.mins).map(|(a, b)| a - b).fold(0.0, f64::max)
    }

    pub fn memory_words(&self) -> usize {
        self.maxes.len() + self.mins.len()
    }
}

/// `l_1` diameter through [`L1DiameterStream`] with `k` projected dimensions.
pub fn diameter_l1(xs: &[SparseVector], k: u32, seed: u64) -> Result<f64> {
    check_same_dim(xs)?;
    let mut st = L1DiameterStream::new(k, seed)?;
    for x in xs {
        st.push(x)?;
    }
    Ok(st.diameter())
}

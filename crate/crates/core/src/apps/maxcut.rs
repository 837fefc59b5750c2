use alloc::vec;
use alloc::vec::Vec;

use super::{check_nonneg, check_same_dim};
use crate::embed::{MaxHashMap, SparseImage};
use crate::hash::HashSpec;
use crate::norm::pow_abs;
use crate::{Error, Norm, Result, SparseVector};

/// Largest point count for exhaustive enumeration (`2^{n-1}` cuts).
pub const MAXCUT_MAX_POINTS: usize = 22;

/// A bipartition and its value. `side[i]` is true for points in `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cut {
    pub value: f64,
    pub side: Vec<bool>,
}

impl Cut {
    /// Bitmask of `S`, point `i` at bit `i`.
    pub fn mask(&self) -> u64 {
        self.side.iter().enumerate().fold(0, |m, (i, &b)| m | (b as u64) << i)
    }
}

/// Result of [`maxcut_sketched`].
#[derive(Debug, Clone, PartialEq)]
pub struct SketchedCut {
    /// Cut found in the projected space, valued there.
    pub cut: Cut,
    pub m: u64,
}

/// `m = ceil(200 s / eps^2)`.
pub fn sketch_buckets(s: usize, eps: f64) -> Result<u64> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::param("eps must lie in (0, 1)"));
    }
    Ok(libm::ceil(200.0 * s.max(1) as f64 / (eps * eps)) as u64)
}

fn edge_weight(d: f64, norm: Norm) -> f64 {
    match norm {
        Norm::P(e) => pow_abs(d, e.get()),
        Norm::Inf => d,
    }
}

/// Sum of `w[i][j]` over pairs split by `side`. `w` is row-major `n x n`.
pub fn cut_value(w: &[f64], side: &[bool]) -> f64 {
    let n = side.len();
    let mut total = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            if side[i] != side[j] {
                total += w[i * n + j];
            }
        }
    }
    total
}

/// Exhaustive max-cut over a symmetric weight matrix. The last point is
/// pinned outside `S`; subsets of the rest are walked in Gray-code order
/// with an `O(n)` update per step. The reported value is recomputed from
/// scratch for the winning cut.
pub fn maxcut_weights(w: &[f64], n: usize) -> Result<Cut> {
    if n == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    if n > MAXCUT_MAX_POINTS {
        return Err(Error::TooLarge { what: "max-cut points", value: n as u64, limit: MAXCUT_MAX_POINTS as u64 });
    }
    if w.len() != n * n {
        return Err(Error::param("weight matrix must be n x n"));
    }
    let mut side = vec![false; n];
    let mut best_side = side.clone();
    let (mut cur, mut best) = (0.0f64, 0.0f64);
    for g in 1u64..1 << (n - 1) {
        let v = g.trailing_zeros() as usize;
        let row = &w[v * n..(v + 1) * n];
        let mut delta = 0.0;
        for (u, &wt) in row.iter().enumerate() {
            if u != v {
                delta += if side[u] == side[v] { wt } else { -wt };
            }
        }
        side[v] = !side[v];
        cur += delta;
        if cur > best {
            best = cur;
            best_side.copy_from_slice(&side);
        }
    }
    Ok(Cut { value: cut_value(w, &best_side), side: best_side })
}

fn weights_from<F>(n: usize, mut dist: F) -> Vec<f64>
where
    F: FnMut(usize, usize) -> f64,
{
    let mut w = vec![0.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let d = dist(i, j);
            w[i * n + j] = d;
            w[j * n + i] = d;
        }
    }
    w
}

/// Exact `max_S sum_{x in S, y not in S} ||x - y||_p^p` (plain `||x - y||`
/// for `l_inf`).
pub fn maxcut_brute(xs: &[SparseVector], norm: Norm) -> Result<Cut> {
    check_same_dim(xs)?;
    if xs.len() > MAXCUT_MAX_POINTS {
        return Err(Error::TooLarge { what: "max-cut points", value: xs.len() as u64, limit: MAXCUT_MAX_POINTS as u64 });
    }
    let w = weights_from(xs.len(), |i, j| {
        edge_weight(crate::vector::lp_dist(&xs[i], &xs[j], norm).unwrap_or(0.0), norm)
    });
    maxcut_weights(&w, xs.len())
}

/// Max-cut of `{f(x)}` for a given map.
pub fn maxcut_with_map(xs: &[SparseVector], norm: Norm, map: &MaxHashMap) -> Result<Cut> {
    check_same_dim(xs)?;
    check_nonneg(xs)?;
    if xs.len() > MAXCUT_MAX_POINTS {
        return Err(Error::TooLarge { what: "max-cut points", value: xs.len() as u64, limit: MAXCUT_MAX_POINTS as u64 });
    }
    let images: Vec<SparseImage> = xs.iter().map(|x| map.image(x)).collect();
    let w = weights_from(xs.len(), |i, j| {
        edge_weight(crate::embed::maxhash_image_distance(&images[i], &images[j], norm), norm)
    });
    maxcut_weights(&w, xs.len())
}

/// Max-cut after one max-hash map with [`sketch_buckets`] buckets, where
/// `s` is the largest support in `xs`. Never above [`maxcut_brute`]: every
/// cut's value is non-expanded.
pub fn maxcut_sketched(xs: &[SparseVector], norm: Norm, eps: f64, seed: u64) -> Result<SketchedCut> {
    let s = xs.iter().map(SparseVector::nnz).max().unwrap_or(1);
    let m = sketch_buckets(s, eps)?;
    let cut = maxcut_with_map(xs, norm, &MaxHashMap::new(HashSpec::new(seed, 0, m)))?;
    Ok(SketchedCut { cut, m })
}

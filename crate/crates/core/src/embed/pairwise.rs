//! All-pairs power sums for a stacked embedding.
//!
//! For a pair `(x, y)` and copy `k`, `||f_k(x) - f_k(y)||_p^p` differs from
//! `||x - y||_p^p` only inside buckets that receive two or more coordinates
//! of `supp(x) ∪ supp(y)`. So the embedded sum is `T * ||x - y||_p^p` minus
//! a loss collected from colliding buckets only. A bucket touched by just one
//! of the two vectors loses the same amount for every partner that misses it
//! (the vector's "self loss"), which is accumulated once per vector; pairs
//! that both touch a colliding bucket get an explicit correction.

use alloc::vec;
use alloc::vec::Vec;

use super::StackedEmbedding;
use crate::norm::pow_abs;
use crate::vector::MergeDiff;
use crate::{Error, Result, SparseVector};

/// Exact and embedded `p`-th power distances for every pair `i < j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseSums {
    n: usize,
    copies: u64,
    exponents: Vec<f64>,
    exact: Vec<f64>,
    embedded: Vec<f64>,
}

impl PairwiseSums {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    fn slot(&self, i: usize, j: usize, e: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        assert!(i != j && j < self.n && e < self.exponents.len());
        pair_index(self.n, i, j) * self.exponents.len() + e
    }

    /// `||x_i - x_j||_p^p` for exponent number `e`.
    pub fn exact(&self, i: usize, j: usize, e: usize) -> f64 {
        self.exact[self.slot(i, j, e)]
    }

    /// `sum_k ||f_k(x_i) - f_k(x_j)||_p^p` for exponent number `e`.
    pub fn embedded(&self, i: usize, j: usize, e: usize) -> f64 {
        self.embedded[self.slot(i, j, e)]
    }

    /// `(embedded / T) / exact`; 1 when both are zero.
    pub fn ratio(&self, i: usize, j: usize, e: usize) -> f64 {
        let t = self.exact(i, j, e);
        let f = self.embedded(i, j, e) / self.copies as f64;
        if t == 0.0 {
            if f == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            f / t
        }
    }

    /// `(min, max)` of [`ratio`](Self::ratio) over all pairs for exponent `e`.
    pub fn ratio_range(&self, e: usize) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let r = self.ratio(i, j, e);
                lo = lo.min(r);
                hi = hi.max(r);
            }
        }
        (lo, hi)
    }
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

const NONE: u32 = u32::MAX;

/// Open-addressing table grouping coordinates by bucket, reset per copy by
/// bumping a stamp.
struct Grouper {
    mask: usize,
    shift: u32,
    key: Vec<u64>,
    stamp: Vec<u64>,
    head: Vec<u32>,
    count: Vec<u32>,
    next: Vec<u32>,
    multi: Vec<usize>,
}

impl Grouper {
    fn new(items: usize) -> Self {
        let cap = (2 * items).next_power_of_two().max(16);
        Grouper {
            mask: cap - 1,
            shift: 64 - cap.trailing_zeros(),
            key: vec![0; cap],
            stamp: vec![0; cap],
            head: vec![NONE; cap],
            count: vec![0; cap],
            next: vec![NONE; items],
            multi: Vec::new(),
        }
    }

    fn insert(&mut self, stamp: u64, bucket: u64, item: u32) {
        let mut s = (bucket.wrapping_mul(0x9E37_79B9_7F4A_7C15) >> self.shift) as usize;
        loop {
            if self.stamp[s] != stamp {
                self.stamp[s] = stamp;
                self.key[s] = bucket;
                self.head[s] = item;
                self.count[s] = 1;
                self.next[item as usize] = NONE;
                return;
            }
            if self.key[s] == bucket {
                self.next[item as usize] = self.head[s];
                self.head[s] = item;
                self.count[s] += 1;
                if self.count[s] == 2 {
                    self.multi.push(s);
                }
                return;
            }
            s = (s + 1) & self.mask;
        }
    }
}

struct Touch {
    vid: usize,
    max: f64,
    start: usize,
    end: usize,
}

pub(super) fn compute(
    emb: &StackedEmbedding,
    xs: &[SparseVector],
    exponents: &[f64],
) -> Result<PairwiseSums> {
    if let Some(first) = xs.first() {
        for x in xs {
            first.check_dim(x)?;
        }
    }
    if let Some(&p) = exponents.iter().find(|&&p| !(p >= 1.0 && p.is_finite())) {
        return Err(Error::InvalidNorm(p));
    }
    let n = xs.len();
    if n > u32::MAX as usize {
        return Err(Error::TooLarge { what: "dataset size", value: n as u64, limit: u32::MAX as u64 });
    }
    let ne = exponents.len();
    let npairs = n * n.saturating_sub(1) / 2;
    let copies = emb.copies();

    let mut exact = vec![0.0; npairs * ne];
    for i in 0..n {
        for j in i + 1..n {
            let base = pair_index(n, i, j) * ne;
            for d in MergeDiff::new(&xs[i], &xs[j]) {
                for (e, &p) in exponents.iter().enumerate() {
                    exact[base + e] += pow_abs(d, p);
                }
            }
        }
    }

    // postings: distinct coordinate -> (vector, value) list
    let mut triples: Vec<(u64, u32, f64)> = Vec::new();
    for (vid, x) in xs.iter().enumerate() {
        triples.extend(x.iter().map(|(j, v)| (j, vid as u32, v)));
    }
    triples.sort_unstable_by_key(|&(j, vid, _)| (j, vid));
    let mut coords: Vec<u64> = Vec::new();
    let mut post_start: Vec<usize> = Vec::new();
    for (t, &(j, _, _)) in triples.iter().enumerate() {
        if coords.last() != Some(&j) {
            coords.push(j);
            post_start.push(t);
        }
    }
    post_start.push(triples.len());

    let mut self_loss = vec![0.0; n * ne];
    let mut corr = vec![0.0; npairs * ne];
    let mut grouper = Grouper::new(coords.len());
    let mut entries: Vec<(u32, u32, f64)> = Vec::new();
    let mut touched: Vec<Touch> = Vec::new();
    let mut own: Vec<f64> = Vec::new();
    let mut direct = vec![0.0; ne];

    for (k, h) in emb.hashers().iter().enumerate() {
        let stamp = k as u64 + 1;
        grouper.multi.clear();
        for (u, &j) in coords.iter().enumerate() {
            grouper.insert(stamp, h.bucket(j), u as u32);
        }
        for mi in 0..grouper.multi.len() {
            let slot = grouper.multi[mi];
            entries.clear();
            let mut u = grouper.head[slot];
            while u != NONE {
                let ui = u as usize;
                for &(_, vid, val) in &triples[post_start[ui]..post_start[ui + 1]] {
                    entries.push((vid, u, val));
                }
                u = grouper.next[ui];
            }
            entries.sort_unstable_by_key(|&(vid, u, _)| (vid, u));

            touched.clear();
            own.clear();
            let mut a = 0;
            while a < entries.len() {
                let vid = entries[a].0;
                let mut b = a;
                let mut max = f64::NEG_INFINITY;
                while b < entries.len() && entries[b].0 == vid {
                    max = max.max(entries[b].2);
                    b += 1;
                }
                for (e, &p) in exponents.iter().enumerate() {
                    let sum: f64 = entries[a..b].iter().map(|t| pow_abs(t.2, p)).sum();
                    let loss = sum - pow_abs(max, p);
                    own.push(loss);
                    self_loss[vid as usize * ne + e] += loss;
                }
                touched.push(Touch { vid: vid as usize, max, start: a, end: b });
                a = b;
            }

            for ta in 0..touched.len() {
                for tb in ta + 1..touched.len() {
                    let (x, y) = (&touched[ta], &touched[tb]);
                    direct.iter_mut().for_each(|d| *d = 0.0);
                    let (mut i, mut j) = (x.start, y.start);
                    while i < x.end || j < y.end {
                        let d = if j >= y.end || (i < x.end && entries[i].1 < entries[j].1) {
                            i += 1;
                            entries[i - 1].2
                        } else if i >= x.end || entries[j].1 < entries[i].1 {
                            j += 1;
                            -entries[j - 1].2
                        } else {
                            i += 1;
                            j += 1;
                            entries[i - 1].2 - entries[j - 1].2
                        };
                        for (e, &p) in exponents.iter().enumerate() {
                            direct[e] += pow_abs(d, p);
                        }
                    }
                    let base = pair_index(n, x.vid, y.vid) * ne;
                    for (e, &p) in exponents.iter().enumerate() {
                        let loss = direct[e] - pow_abs(x.max - y.max, p);
                        corr[base + e] += loss - own[ta * ne + e] - own[tb * ne + e];
                    }
                }
            }
        }
    }

    let mut embedded = vec![0.0; npairs * ne];
    for i in 0..n {
        for j in i + 1..n {
            let base = pair_index(n, i, j) * ne;
            for e in 0..ne {
                let loss = self_loss[i * ne + e] + self_loss[j * ne + e] + corr[base + e];
                embedded[base + e] = copies as f64 * exact[base + e] - loss;
            }
        }
    }

    Ok(PairwiseSums { n, copies, exponents: exponents.to_vec(), exact, embedded })
}

use alloc::vec;
use alloc::vec::Vec;

use super::{check_nonneg, check_same_dim, need_points};
use crate::embed::SparseImage;
use crate::hash::{BucketHasher, HashSpec};
use crate::{Error, Result, SparseVector};

/// Sketch answering `sum_{x in X} ||x - y||_p^p` for even `p`.
///
/// Repetition `j` hashes with `HashSpec { seed, copy_index: j, m }` and keeps
/// `c[i][k] = sum_x f_j(x)_i^(p-k)` for every bucket `i` and `k in 0..=p`,
/// with `0^0 = 1` so that `c[i][p] = n`. Expanding `(a - z)^p` binomially,
/// `t_j = sum_i sum_k C(p,k) (-z_i)^k c[i][k]` equals
/// `sum_x ||f_j(x) - f_j(y)||_p^p` exactly; the answer is the lower median
/// of the `t_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceEstimator {
    p: u32,
    eps: f64,
    seed: u64,
    m: u64,
    dim: Option<u64>,
    hashers: Vec<BucketHasher>,
    /// `reps x m x (p + 1)`, row-major.
    tables: Vec<f64>,
}

fn check_p(p: u32) -> Result<()> {
    if p < 2 || p % 2 == 1 {
        return Err(Error::param(alloc::format!("p must be even and at least 2, got {p}")));
    }
    Ok(())
}

fn binomials(p: u32) -> Vec<f64> {
    let mut row = vec![1.0f64; p as usize + 1];
    for k in 1..p as usize {
        row[k] = row[k - 1] * (p as usize - k + 1) as f64 / k as f64;
    }
    row
}

impl DistanceEstimator {
    /// `R = ceil(8 ln n)` repetitions of `m = ceil(200 s / eps^2)` buckets,
    /// `s` the largest support in `xs`.
    pub fn build(xs: &[SparseVector], p: u32, eps: f64, seed: u64) -> Result<Self> {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(Error::param("eps must lie in (0, 1)"));
        }
        need_points(xs, 1)?;
        let s = xs.iter().map(SparseVector::nnz).max().unwrap_or(1).max(1);
        let m = libm::ceil(200.0 * s as f64 / (eps * eps)) as u64;
        let reps = (libm::ceil(8.0 * libm::log(xs.len() as f64)) as usize).max(1);
        Self::with_shape(xs, p, eps, m, reps, seed)
    }

    pub fn with_shape(
        xs: &[SparseVector],
        p: u32,
        eps: f64,
        m: u64,
        reps: usize,
        seed: u64,
    ) -> Result<Self> {
        check_p(p)?;
        need_points(xs, 1)?;
        check_same_dim(xs)?;
        check_nonneg(xs)?;
        if m == 0 || reps == 0 {
            return Err(Error::param("m and R must be positive"));
        }
        let width = p as usize + 1;
        let mut est = DistanceEstimator {
            p,
            eps,
            seed,
            m,
            dim: Some(xs[0].dim()),
            hashers: (0..reps as u64).map(|j| HashSpec::new(seed, j, m).hasher()).collect(),
            tables: vec![0.0; reps * m as usize * width],
        };
        let mut img = SparseImage::new();
        for (j, h) in est.hashers.iter().enumerate() {
            let table = &mut est.tables[j * m as usize * width..(j + 1) * m as usize * width];
            for x in xs {
                crate::embed::maxhash_image_into(h, x, &mut img);
                for &(b, a) in &img {
                    let row = &mut table[b as usize * width..(b as usize + 1) * width];
                    // row[k] += a^(p-k) for k < p
                    let mut pw = 1.0;
                    for k in (0..p as usize).rev() {
                        pw *= a;
                        row[k] += pw;
                    }
                }
            }
            for row in table.chunks_exact_mut(width) {
                row[p as usize] = xs.len() as f64;
            }
        }
        Ok(est)
    }

    /// Rebuild from serialized tables (`reps x m x (p + 1)` flattened).
    pub fn from_parts(p: u32, eps: f64, seed: u64, m: u64, reps: usize, tables: Vec<f64>) -> Result<Self> {
        check_p(p)?;
        if m == 0 || reps == 0 {
            return Err(Error::param("m and R must be positive"));
        }
        let width = p as usize + 1;
        if tables.len() as u64 != reps as u64 * m * width as u64 {
            return Err(Error::param("coefficient table has the wrong shape"));
        }
        if tables.iter().any(|v| !v.is_finite()) {
            return Err(Error::param("coefficient table holds a non-finite value"));
        }
        let n = tables[p as usize];
        if tables.chunks_exact(width).any(|row| row[p as usize] != n) {
            return Err(Error::InvariantBreach("c[i][p] differs between buckets".into()));
        }
        Ok(DistanceEstimator {
            p,
            eps,
            seed,
            m,
            dim: None,
            hashers: (0..reps as u64).map(|j| HashSpec::new(seed, j, m).hasher()).collect(),
            tables,
        })
    }

    pub fn with_dim(mut self, dim: u64) -> Self {
        self.dim = Some(dim);
        self
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn dim(&self) -> Option<u64> {
        self.dim
    }

    /// `R`.
    pub fn reps(&self) -> usize {
        self.hashers.len()
    }

    /// Number of indexed points.
    pub fn n(&self) -> usize {
        self.tables[self.p as usize] as usize
    }

    /// `c[bucket][k]` of repetition `rep`.
    pub fn coefficient(&self, rep: usize, bucket: u64, k: u32) -> f64 {
        let width = self.p as usize + 1;
        self.tables[(rep * self.m as usize + bucket as usize) * width + k as usize]
    }

    /// All coefficients, `reps x m x (p + 1)` flattened.
    pub fn tables(&self) -> &[f64] {
        &self.tables
    }

    pub fn query(&self, y: &SparseVector) -> Result<f64> {
        self.query_counted(y).map(|(v, _)| v)
    }

    /// Estimate plus the number of coefficients read, `R * m * (p + 1)`.
    pub fn query_counted(&self, y: &SparseVector) -> Result<(f64, u64)> {
        if let Some(d) = self.dim {
            if d != y.dim() {
                return Err(Error::DimensionMismatch { left: d, right: y.dim() });
            }
        }
        y.require_nonneg()?;
        let width = self.p as usize + 1;
        let binom = binomials(self.p);
        let mut z = vec![0.0f64; self.m as usize];
        let mut img = SparseImage::new();
        let mut powers = vec![0.0f64; width];
        let mut ops = 0u64;
        let mut estimates = Vec::with_capacity(self.reps());
        for (j, h) in self.hashers.iter().enumerate() {
            crate::embed::maxhash_image_into(h, y, &mut img);
            img.iter().for_each(|&(b, v)| z[b as usize] = v);
            let table = &self.tables[j * self.m as usize * width..(j + 1) * self.m as usize * width];
            let mut t = 0.0;
            for (i, row) in table.chunks_exact(width).enumerate() {
                // binom(p,k) (-z)^k
                let mut zk = 1.0;
                for k in 0..width {
                    powers[k] = binom[k] * zk;
                    zk *= -z[i];
                }
                t += row.iter().zip(&powers).map(|(c, w)| c * w).sum::<f64>();
                ops += width as u64;
            }
            img.iter().for_each(|&(b, _)| z[b as usize] = 0.0);
            estimates.push(t);
        }
        estimates.sort_by(f64::total_cmp);
        Ok((estimates[(estimates.len() - 1) / 2], ops))
    }
}

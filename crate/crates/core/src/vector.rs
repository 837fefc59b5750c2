use alloc::vec::Vec;

use crate::{Error, Norm, Result};

/// A sparse real vector over `[0, dim)`.
///
/// Entries are kept sorted by index with no duplicates and no stored zeros.
/// Explicit zeros passed to the constructors are dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseVector {
    dim: u64,
    indices: Vec<u64>,
    values: Vec<f64>,
}

impl SparseVector {
    /// Build from `(index, value)` pairs in any order.
    ///
    /// Fails on an index `>= dim`, a repeated index, or a non-finite value.
    pub fn new<I>(dim: u64, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, f64)>,
    {
        if dim == 0 {
            return Err(Error::param("dimension must be positive"));
        }
        let mut pairs: Vec<(u64, f64)> = entries.into_iter().collect();
        pairs.sort_unstable_by_key(|&(i, _)| i);
        let mut indices = Vec::with_capacity(pairs.len());
        let mut values = Vec::with_capacity(pairs.len());
        let mut last = None;
        for (i, v) in pairs {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            if last == Some(i) {
                return Err(Error::DuplicateIndex(i));
            }
            last = Some(i);
            if !v.is_finite() {
                return Err(Error::NonFiniteValue { index: i });
            }
            if v != 0.0 {
                indices.push(i);
                values.push(v);
            }
        }
        Ok(SparseVector { dim, indices, values })
    }

    /// The zero vector.
    pub fn zeros(dim: u64) -> Self {
        assert!(dim > 0, "dimension must be positive");
        SparseVector { dim, indices: Vec::new(), values: Vec::new() }
    }

    /// Unit vector `e_i`.
    pub fn basis(dim: u64, i: u64) -> Result<Self> {
        SparseVector::new(dim, [(i, 1.0)])
    }

    // Caller guarantees sorted unique indices, all < dim, finite non-zero values.
    pub(crate) fn from_sorted_unchecked(dim: u64, indices: Vec<u64>, values: Vec<f64>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(values.iter().all(|v| *v != 0.0 && v.is_finite()));
        SparseVector { dim, indices, values }
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    /// Number of stored non-zeros.
    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (u64, f64)> + '_ {
        self.indices.iter().copied().zip(self.values.iter().copied())
    }

    pub fn get(&self, index: u64) -> f64 {
        match self.indices.binary_search(&index) {
            Ok(pos) => self.values[pos],
            Err(_) => 0.0,
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.values.iter().all(|&v| v > 0.0)
    }

    /// First index holding a negative value, if any.
    pub fn first_negative(&self) -> Option<u64> {
        self.iter().find(|&(_, v)| v < 0.0).map(|(i, _)| i)
    }

    pub(crate) fn require_nonneg(&self) -> Result<()> {
        match self.first_negative() {
            Some(index) => Err(Error::NegativeEntry { index }),
            None => Ok(()),
        }
    }

    pub fn norm(&self, norm: Norm) -> f64 {
        norm.reduce(self.values.iter().copied())
    }

    /// `||self - other||` in the given norm, merged over the union support.
    pub fn distance(&self, other: &SparseVector, norm: Norm) -> Result<f64> {
        self.check_dim(other)?;
        Ok(norm.reduce(MergeDiff::new(self, other)))
    }

    pub fn scale(&self, factor: f64) -> SparseVector {
        if factor == 0.0 {
            return SparseVector::zeros(self.dim);
        }
        let values = self.values.iter().map(|v| v * factor).collect();
        SparseVector::from_sorted_unchecked(self.dim, self.indices.clone(), values)
    }

    pub fn add(&self, other: &SparseVector) -> Result<SparseVector> {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &SparseVector) -> Result<SparseVector> {
        self.combine(other, -1.0)
    }

    fn combine(&self, other: &SparseVector, sign: f64) -> Result<SparseVector> {
        self.check_dim(other)?;
        let mut indices = Vec::with_capacity(self.nnz() + other.nnz());
        let mut values = Vec::with_capacity(self.nnz() + other.nnz());
        let (mut a, mut b) = (0, 0);
        loop {
            let (idx, v) = match (self.indices.get(a), other.indices.get(b)) {
                (None, None) => break,
                (Some(&i), None) => {
                    a += 1;
                    (i, self.values[a - 1])
                }
                (None, Some(&j)) => {
                    b += 1;
                    (j, sign * other.values[b - 1])
                }
                (Some(&i), Some(&j)) if i < j => {
                    a += 1;
                    (i, self.values[a - 1])
                }
                (Some(&i), Some(&j)) if j < i => {
                    b += 1;
                    (j, sign * other.values[b - 1])
                }
                (Some(&i), Some(_)) => {
                    a += 1;
                    b += 1;
                    (i, self.values[a - 1] + sign * other.values[b - 1])
                }
            };
            if v != 0.0 {
                indices.push(idx);
                values.push(v);
            }
        }
        Ok(SparseVector::from_sorted_unchecked(self.dim, indices, values))
    }

    pub(crate) fn check_dim(&self, other: &SparseVector) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }
}

/// `||x||_p` (or `||x||_inf`); zero for the empty vector.
pub fn lp_norm(x: &SparseVector, norm: Norm) -> f64 {
    x.norm(norm)
}

/// `||x - y||_p`; fails when the dimensions differ.
pub fn lp_dist(x: &SparseVector, y: &SparseVector, norm: Norm) -> Result<f64> {
    x.distance(y, norm)
}

/// Exact sparse sum; entries cancelling to zero are dropped.
pub fn sum_vectors(x: &SparseVector, y: &SparseVector) -> Result<SparseVector> {
    x.add(y)
}

/// Exact sparse difference `x - y`.
pub fn diff_vectors(x: &SparseVector, y: &SparseVector) -> Result<SparseVector> {
    x.sub(y)
}

/// Differences `x_i - y_i` over the union of both supports.
#[derive(Clone)]
pub(crate) struct MergeDiff<'a> {
    x: &'a SparseVector,
    y: &'a SparseVector,
    a: usize,
    b: usize,
}

impl<'a> MergeDiff<'a> {
    pub(crate) fn new(x: &'a SparseVector, y: &'a SparseVector) -> Self {
        MergeDiff { x, y, a: 0, b: 0 }
    }
}

impl Iterator for MergeDiff<'_> {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let xi = self.x.indices.get(self.a);
        let yi = self.y.indices.get(self.b);
        match (xi, yi) {
            (None, None) => None,
            (Some(_), None) => {
                self.a += 1;
                Some(self.x.values[self.a - 1])
            }
            (None, Some(_)) => {
                self.b += 1;
                Some(-self.y.values[self.b - 1])
            }
            (Some(i), Some(j)) => {
                if i < j {
                    self.a += 1;
                    Some(self.x.values[self.a - 1])
                } else if j < i {
                    self.b += 1;
                    Some(-self.y.values[self.b - 1])
                } else {
                    self.a += 1;
                    self.b += 1;
                    Some(self.x.values[self.a - 1] - self.y.values[self.b - 1])
                }
            }
        }
    }
}

use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, Result, SparseVector};

/// Ordered, id-tagged collection of sparse vectors sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    dim: u64,
    ids: Vec<String>,
    vectors: Vec<SparseVector>,
    max_sparsity: usize,
    nonneg: bool,
}

impl Dataset {
    pub fn new(dim: u64) -> Self {
        Dataset { dim, ids: Vec::new(), vectors: Vec::new(), max_sparsity: 0, nonneg: true }
    }

    /// Tag vectors with their position (`"0"`, `"1"`, ...).
    pub fn from_vectors(dim: u64, vectors: Vec<SparseVector>) -> Result<Self> {
        let mut ds = Dataset::new(dim);
        for (i, v) in vectors.into_iter().enumerate() {
            ds.push(alloc::format!("{i}"), v)?;
        }
        Ok(ds)
    }

    pub fn push(&mut self, id: impl Into<String>, v: SparseVector) -> Result<()> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        self.max_sparsity = self.max_sparsity.max(v.nnz());
        self.nonneg &= v.is_nonneg();
        self.ids.push(id.into());
        self.vectors.push(v);
        Ok(())
    }

    pub fn dim(&self) -> u64 {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn max_sparsity(&self) -> usize {
        self.max_sparsity
    }

    /// True iff every stored value is positive.
    pub fn is_nonneg(&self) -> bool {
        self.nonneg
    }

    pub fn vectors(&self) -> &[SparseVector] {
        &self.vectors
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&str, &SparseVector)> {
        self.ids.iter().map(String::as_str).zip(self.vectors.iter())
    }

    /// First negative entry across the dataset, as `NegativeEntry`.
    pub fn require_nonneg(&self) -> Result<()> {
        self.vectors.iter().try_for_each(SparseVector::require_nonneg)
    }
}

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::embed::BirthdayMap;
use crate::hash::rng;
use crate::{Error, Result, SparseVector};

/// Dense `rows x cols` real matrix, stored row-major.
///
/// A per-column list of non-zero entries is kept alongside so that applying
/// the map to a sparse vector costs the non-zeros of the touched columns.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseLinearMap {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    col_start: Vec<usize>,
    col_entries: Vec<(u32, f64)>,
}

impl DenseLinearMap {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::param("matrix needs at least one row and one column"));
        }
        if rows > u32::MAX as usize {
            return Err(Error::TooLarge { what: "rows", value: rows as u64, limit: u32::MAX as u64 });
        }
        if data.len() != rows * cols {
            return Err(Error::param(alloc::format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue { index: pos as u64 });
        }
        let mut col_start = Vec::with_capacity(cols + 1);
        let mut col_entries = Vec::new();
        for c in 0..cols {
            col_start.push(col_entries.len());
            for r in 0..rows {
                let v = data[r * cols + c];
                if v != 0.0 {
                    col_entries.push((r as u32, v));
                }
            }
        }
        col_start.push(col_entries.len());
        Ok(DenseLinearMap { rows, cols, data, col_start, col_entries })
    }

    pub fn identity(d: usize) -> Result<Self> {
        let mut data = vec![0.0; d * d];
        for i in 0..d {
            data[i * d + i] = 1.0;
        }
        DenseLinearMap::new(d, d, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        DenseLinearMap::new(rows, cols, vec![0.0; rows * cols])
    }

    /// The matrix of a sum-hash map restricted to the first `cols` coordinates.
    pub fn from_birthday(map: &BirthdayMap, cols: usize) -> Result<Self> {
        let rows = map.m() as usize;
        let mut data = vec![0.0; rows * cols];
        for c in 0..cols {
            data[map.bucket(c as u64) as usize * cols + c] = 1.0;
        }
        DenseLinearMap::new(rows, cols, data)
    }

    /// iid standard Gaussian entries; with `unit_columns` every column is
    /// rescaled to Euclidean norm 1.
    pub fn gaussian(rows: usize, cols: usize, seed: u64, unit_columns: bool) -> Result<Self> {
        let mut g = rng(seed);
        let mut data: Vec<f64> = (0..rows * cols).map(|_| g.sample(StandardNormal)).collect();
        if unit_columns {
            for c in 0..cols {
                let norm = libm::sqrt((0..rows).map(|r| { let v = data[r * cols + c]; v * v }).sum::<f64>());
                if norm > 0.0 {
                    for r in 0..rows {
                        data[r * cols + c] /= norm;
                    }
                }
            }
        }
        DenseLinearMap::new(rows, cols, data)
    }

    /// iid uniform `±1` entries.
    pub fn random_sign(rows: usize, cols: usize, seed: u64) -> Result<Self> {
        let mut g = rng(seed);
        let data = (0..rows * cols).map(|_| if g.random::<bool>() { 1.0 } else { -1.0 }).collect();
        DenseLinearMap::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Non-zero `(row, value)` entries of column `c`.
    pub fn column(&self, c: usize) -> &[(u32, f64)] {
        &self.col_entries[self.col_start[c]..self.col_start[c + 1]]
    }

    pub(crate) fn check_cols(&self, x: &SparseVector) -> Result<()> {
        if x.dim() != self.cols as u64 {
            return Err(Error::DimensionMismatch { left: self.cols as u64, right: x.dim() });
        }
        Ok(())
    }

    /// Dense `Ax`.
    pub fn apply(&self, x: &SparseVector) -> Result<Vec<f64>> {
        self.check_cols(x)?;
        let mut out = vec![0.0; self.rows];
        for (j, v) in x.iter() {
            for &(r, a) in self.column(j as usize) {
                out[r as usize] += a * v;
            }
        }
        Ok(out)
    }

    /// `Ax` written into `acc` (all zeros on entry), returning the touched
    /// rows. The caller zeroes those rows again afterwards.
    pub(crate) fn apply_touched(&self, x: &SparseVector, acc: &mut [f64], touched: &mut Vec<u32>) {
        touched.clear();
        for (j, v) in x.iter() {
            for &(r, a) in self.column(j as usize) {
                if acc[r as usize] == 0.0 {
                    touched.push(r);
                }
                acc[r as usize] += a * v;
            }
        }
        touched.sort_unstable();
        touched.dedup();
    }

    /// `<A_i, A_j>` for columns `i`, `j`.
    pub fn column_dot(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (self.column(i), self.column(j));
        let (mut p, mut q, mut acc) = (0, 0, 0.0);
        while p < a.len() && q < b.len() {
            if a[p].0 == b[q].0 {
                acc += a[p].1 * b[q].1;
                p += 1;
                q += 1;
            } else if a[p].0 < b[q].0 {
                p += 1;
            } else {
                q += 1;
            }
        }
        acc
    }
}

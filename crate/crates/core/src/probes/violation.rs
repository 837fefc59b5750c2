use alloc::format;
use alloc::vec::Vec;

use crate::probes::DenseLinearMap;
use crate::{Error, Norm, Result, SparseVector};

/// Number of columns in the witness.
pub const WITNESS_SIZE: usize = 10;

/// A 0/1 vector `x` with `||x||_inf = 1` but `||Ax||_inf >= 5`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub witness: SparseVector,
    /// Row holding the same-signed large entries.
    pub row: usize,
    /// Re-evaluated `||Ax||_inf`.
    pub value: f64,
}

/// Build a witness that `A` does not keep `||Ax||_inf` within
/// `[1/2, 3/2] ||x||_inf` on 10-sparse 0/1 vectors.
///
/// Needs `rows < cols / 100` and a `|a| >= 1/2` entry in every column. Then
/// some row has more than 100 such entries, at least 50 of one sign; the
/// indicator of the first ten gives `|(Ax)_row| >= 5`. The row with the
/// most same-signed large entries is chosen (lowest index on ties, positive
/// sign on ties) and the result is re-evaluated before it is returned.
pub fn find_linf_violation(a: &DenseLinearMap) -> Result<Violation> {
    let (rows, cols) = (a.rows(), a.cols());
    if rows.saturating_mul(100) >= cols {
        return Err(Error::PreconditionShape { rows, cols });
    }
    for c in 0..cols {
        if !a.column(c).iter().any(|&(_, v)| libm::fabs(v) >= 0.5) {
            return Err(Error::PreconditionColumns { column: c });
        }
    }
    let mut best: Option<(usize, usize, bool)> = None;
    for r in 0..rows {
        let row = a.row(r);
        let pos = row.iter().filter(|&&v| v >= 0.5).count();
        let neg = row.iter().filter(|&&v| v <= -0.5).count();
        let (count, positive) = if neg > pos { (neg, false) } else { (pos, true) };
        if best.is_none_or(|(_, c, _)| count > c) {
            best = Some((r, count, positive));
        }
    }
    let (row, count, positive) = best.expect("at least one row");
    if count < WITNESS_SIZE {
        return Err(Error::InvariantBreach(format!(
            "row {row} has only {count} same-signed large entries"
        )));
    }
    let chosen: Vec<(u64, f64)> = a
        .row(row)
        .iter()
        .enumerate()
        .filter(|&(_, &v)| if positive { v >= 0.5 } else { v <= -0.5 })
        .take(WITNESS_SIZE)
        .map(|(c, _)| (c as u64, 1.0))
        .collect();
    let witness = SparseVector::new(cols as u64, chosen)?;
    let image = a.apply(&witness)?;
    let value = Norm::Inf.reduce(image.iter().copied());
    if !(value >= 5.0 && witness.norm(Norm::Inf) == 1.0 && witness.nnz() == WITNESS_SIZE) {
        return Err(Error::InvariantBreach(format!("witness re-evaluated to {value}")));
    }
    Ok(Violation { witness, row, value })
}

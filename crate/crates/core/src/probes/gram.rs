use crate::probes::DenseLinearMap;
use crate::{Result, SparseVector};

/// `Z = sum over ordered pairs i != j in supp(u) of <A_i, A_j>^2`.
pub fn gram_overlap_z(a: &DenseLinearMap, u: &SparseVector) -> Result<f64> {
    a.check_cols(u)?;
    let idx = u.indices();
    let mut z = 0.0;
    for (p, &i) in idx.iter().enumerate() {
        for &j in &idx[p + 1..] {
            let dot = a.column_dot(i as usize, j as usize);
            z += 2.0 * dot * dot;
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn orthogonal_columns_give_zero() {
        let a = DenseLinearMap::identity(6).unwrap();
        let u = SparseVector::new(6, [(0, 1.0), (3, -2.0), (5, 0.5)]).unwrap();
        assert_eq!(gram_overlap_z(&a, &u).unwrap(), 0.0);
    }

    #[test]
    fn single_support_has_no_pairs() {
        let a = DenseLinearMap::gaussian(3, 6, 0, false).unwrap();
        let u = SparseVector::new(6, [(4, 1.0)]).unwrap();
        assert_eq!(gram_overlap_z(&a, &u).unwrap(), 0.0);
    }

    #[test]
    fn duplicate_unit_columns() {
        // columns 0 and 1 both equal e_0
        let a = DenseLinearMap::new(2, 3, vec![1.0, 1.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        let u = SparseVector::new(3, [(0, 0.3), (1, -7.0)]).unwrap();
        assert_eq!(gram_overlap_z(&a, &u).unwrap(), 2.0);
        assert!(gram_overlap_z(&a, &SparseVector::zeros(4)).is_err());
    }
}

//! Small shared numerics: symmetric eigendecompositions with a deterministic
//! ordering and sign convention.

use nalgebra::{Matrix3, Matrix6, Vector3, Vector6};

/// Flip v so its first component of magnitude > 1e-12 is positive.
pub(crate) fn canonical_sign3(v: &Vector3<f64>) -> Vector3<f64> {
    for k in 0..3 {
        if v[k].abs() > 1e-12 {
            return if v[k] < 0.0 { -v } else { *v };
        }
    }
    *v
}

/// Eigenvalues of a symmetric 3×3 in ascending order with a canonical
/// right-handed eigenvector matrix: each column's leading nonzero component
/// is positive and the third column is the cross product of the first two,
/// so the returned basis always has determinant +1.
pub(crate) fn sorted_symmetric_eigen3(m: &Matrix3<f64>) -> (Vector3<f64>, Matrix3<f64>) {
    let eig = m.symmetric_eigen();
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let values = Vector3::new(
        eig.eigenvalues[idx[0]],
        eig.eigenvalues[idx[1]],
        eig.eigenvalues[idx[2]],
    );
    let c0 = canonical_sign3(&eig.eigenvectors.column(idx[0]).into_owned());
    let c1 = canonical_sign3(&eig.eigenvectors.column(idx[1]).into_owned());
    let c2 = c0.cross(&c1);
    (values, Matrix3::from_columns(&[c0, c1, c2]))
}

/// Eigenvalues of a symmetric 6×6 in ascending order.
pub(crate) fn sorted_eigenvalues6(m: &Matrix6<f64>) -> Vector6<f64> {
    let mut vals: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Vector6::from_iterator(vals)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn eigen3_is_sorted_and_right_handed() {
        let m = Matrix3::new(2.0, 1.0, 0.0, 1.0, 3.0, 0.5, 0.0, 0.5, -1.0);
        let (vals, vecs) = sorted_symmetric_eigen3(&m);
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
        assert_abs_diff_eq!(vecs.determinant(), 1.0, epsilon = 1e-12);
        let rebuilt = vecs * Matrix3::from_diagonal(&vals) * vecs.transpose();
        assert_abs_diff_eq!(rebuilt, m, epsilon = 1e-12);
    }

    #[test]
    fn zero_matrix_gives_identity_basis() {
        let (vals, vecs) = sorted_symmetric_eigen3(&Matrix3::zeros());
        assert_abs_diff_eq!(vals, Vector3::zeros(), epsilon = 0.0);
        assert_abs_diff_eq!(vecs, Matrix3::identity(), epsilon = 0.0);
    }
}

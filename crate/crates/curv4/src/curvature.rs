//! Algebraic curvature operators on Λ²(ℝ⁴) and their irreducible
//! decomposition.
//!
//! A curvature operator is stored as the symmetric 6×6 matrix
//! M[(i,j),(k,l)] = ⟨ℛ(eᵢ∧eⱼ), eₖ∧eₗ⟩ = R_ijkl in the lexicographic basis of
//! [`crate::lambda2`]. With unit-norm basis forms the diagonal entries are
//! the sectional curvatures of the coordinate planes, the scalar curvature is
//! S = 2·tr M, and the first Bianchi identity reduces to the single relation
//!
//! ```text
//! ⟨ℛe₁₂,e₃₄⟩ − ⟨ℛe₁₃,e₂₄⟩ + ⟨ℛe₁₄,e₂₃⟩ = 0,
//! ```
//!
//! equivalently: the Λ⁺ and Λ⁻ diagonal blocks have equal trace S/4.
//!
//! The orthogonal decomposition splits M into scalar, traceless-Ricci and
//! Weyl parts,
//!
//! ```text
//! R = (S/24)·g∘g + ½(Rc − (S/4)g)∘g + W,
//! ```
//!
//! where ∘ is the Kulkarni–Nomizu product. The scalar part is (S/12)·Id on
//! Λ², the Ricci part is purely off-block in (𝔹⁺, 𝔹⁻), and the Weyl part is
//! block diagonal with traceless symmetric blocks W±.

use crate::lambda2::{pair_index, to_pm_basis, FrameRotation, LEX_PAIRS};
use crate::linalg::{sorted_eigenvalues6, sorted_symmetric_eigen3};
use nalgebra::{Matrix3, Matrix4, Matrix6, Vector3, Vector6};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Default tolerance for symmetry and first-Bianchi validation.
pub const VALIDATE_TOL: f64 = 1e-10;

#[derive(Debug, Error, PartialEq)]
pub enum CurvatureError {
    #[error("operator is not symmetric: residual {residual:e}")]
    NotSymmetric { residual: f64 },
    #[error("operator violates the first Bianchi identity: residual {residual:e}")]
    BianchiViolation { residual: f64 },
}

/// Families produced by [`random_curvature`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomStyle {
    /// Generic symmetric operator projected onto the Bianchi hyperplane.
    General,
    /// Traceless-Ricci part removed (Rc = (S/4)·g).
    Einstein,
    /// Scalar and Ricci parts removed (S = 0, Rc = 0).
    WeylOnly,
}

/// Symmetric curvature operator on Λ² in the lexicographic basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureOperator {
    m: Matrix6<f64>,
}

/// Ricci tensor as a symmetric bilinear form on ℝ⁴.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RicciTensor {
    pub m: Matrix4<f64>,
}

impl RicciTensor {
    pub fn trace(&self) -> f64 {
        self.m.trace()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.m
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    /// Rc − (S/4)·g, the traceless part.
    pub fn traceless(&self) -> Matrix4<f64> {
        self.m - Matrix4::identity() * (self.trace() / 4.0)
    }
}

/// Orthogonal parts of a curvature operator. `scalar_part + ricci_part +
/// weyl_part` reassembles the input; the three parts are mutually orthogonal
/// in the Frobenius inner product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureDecomposition {
    pub scalar: f64,
    pub ricci: RicciTensor,
    pub scalar_part: Matrix6<f64>,
    pub ricci_part: Matrix6<f64>,
    pub weyl_part: Matrix6<f64>,
}

/// Λ± data of the Weyl part of an operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylBlocks {
    /// W⁺ in the basis 𝔹⁺ (traceless symmetric).
    pub plus: Matrix3<f64>,
    /// W⁻ in the basis 𝔹⁻ (traceless symmetric).
    pub minus: Matrix3<f64>,
    /// Eigenvalues of W⁺, ascending.
    pub spectrum_plus: Vector3<f64>,
    /// Eigenvalues of W⁻, ascending.
    pub spectrum_minus: Vector3<f64>,
    /// Right-handed eigenvector basis of W⁺, columns sorted with the spectrum.
    pub basis_plus: Matrix3<f64>,
    /// Right-handed eigenvector basis of W⁻.
    pub basis_minus: Matrix3<f64>,
    /// Λ⁺Λ⁻ block of the full operator (the traceless-Ricci contribution).
    pub mixed: Matrix3<f64>,
}

/// The Weitzenbock curvature term acting on 2-forms:
/// R₂ = (S/6)·g∘g − 2W = (S/3)·Id − 2W± on the two blocks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeitzenbockR2 {
    pub operator: Matrix6<f64>,
    /// Eigenvalues ascending, from an independent 6×6 eigensolve.
    pub spectrum: Vector6<f64>,
}

impl CurvatureOperator {
    pub fn new(m: Matrix6<f64>) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix6<f64> {
        &self.m
    }

    /// Component R_ijkl for arbitrary index order (0-based, i≠j, k≠l).
    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let (a, sa) = pair_index(i, j);
        let (b, sb) = pair_index(k, l);
        sa * sb * self.m[(a, b)]
    }

    /// Scalar curvature S = 2·tr M.
    pub fn scalar(&self) -> f64 {
        2.0 * self.m.trace()
    }

    /// Residual of the first Bianchi identity.
    pub fn bianchi_residual(&self) -> f64 {
        self.m[(0, 5)] - self.m[(1, 4)] + self.m[(2, 3)]
    }

    pub fn symmetry_residual(&self) -> f64 {
        (self.m - self.m.transpose()).abs().max()
    }

    pub fn validate(&self, tol: f64) -> Result<(), CurvatureError> {
        let sym = self.symmetry_residual();
        if sym > tol {
            return Err(CurvatureError::NotSymmetric { residual: sym });
        }
        let bianchi = self.bianchi_residual().abs();
        if bianchi > tol {
            return Err(CurvatureError::BianchiViolation { residual: bianchi });
        }
        Ok(())
    }

    /// Ricci contraction Rc_ik = Σⱼ R_ijkj.
    pub fn ricci_contract(&self) -> RicciTensor {
        let mut rc = Matrix4::zeros();
        for i in 0..4 {
            for k in i..4 {
                let mut sum = 0.0;
                for j in 0..4 {
                    if j != i && j != k {
                        sum += self.entry(i, j, k, j);
                    }
                }
                rc[(i, k)] = sum;
                rc[(k, i)] = sum;
            }
        }
        RicciTensor { m: rc }
    }

    /// Orthogonal decomposition into scalar, traceless-Ricci and Weyl parts.
    pub fn decompose(&self) -> CurvatureDecomposition {
        let scalar = self.scalar();
        let ricci = self.ricci_contract();
        let g = Matrix4::identity();
        let scalar_part = kulkarni_nomizu(&g, &g) * (scalar / 24.0);
        let ricci_part = kulkarni_nomizu(&ricci.traceless(), &g) * 0.5;
        let weyl_part = self.m - scalar_part - ricci_part;
        CurvatureDecomposition {
            scalar,
            ricci,
            scalar_part,
            ricci_part,
            weyl_part,
        }
    }

    /// Λ± blocks of the Weyl part, with spectra and eigenbases.
    pub fn weyl_blocks(&self) -> WeylBlocks {
        let d = self.decompose();
        let w_pm = to_pm_basis(&d.weyl_part);
        let plus: Matrix3<f64> = w_pm.fixed_view::<3, 3>(0, 0).into_owned();
        let minus: Matrix3<f64> = w_pm.fixed_view::<3, 3>(3, 3).into_owned();
        let full_pm = to_pm_basis(&self.m);
        let mixed: Matrix3<f64> = full_pm.fixed_view::<3, 3>(0, 3).into_owned();
        let (spectrum_plus, basis_plus) = sorted_symmetric_eigen3(&plus);
        let (spectrum_minus, basis_minus) = sorted_symmetric_eigen3(&minus);
        WeylBlocks {
            plus,
            minus,
            spectrum_plus,
            spectrum_minus,
            basis_plus,
            basis_minus,
            mixed,
        }
    }

    /// R₂ = (S/6)·g∘g − 2W with an independently computed 6×6 spectrum.
    pub fn weitzenbock_r2(&self) -> WeitzenbockR2 {
        let d = self.decompose();
        let g = Matrix4::identity();
        let operator = kulkarni_nomizu(&g, &g) * (d.scalar / 6.0) - d.weyl_part * 2.0;
        let spectrum = sorted_eigenvalues6(&operator);
        WeitzenbockR2 { operator, spectrum }
    }

    /// Curvature components in the rotated frame: Λ²(F)ᵀ · M · Λ²(F).
    pub fn conjugate(&self, f: &FrameRotation) -> CurvatureOperator {
        let l = f.induced_lambda2();
        CurvatureOperator::new(l.transpose() * self.m * l)
    }

    /// The same metric with the opposite orientation: Λ± roles exchange,
    /// implemented by swapping the (𝔹⁺, 𝔹⁻) blocks.
    pub fn swap_orientation(&self) -> CurvatureOperator {
        let t = to_pm_basis(&self.m);
        let mut s = Matrix6::zeros();
        s.fixed_view_mut::<3, 3>(0, 0)
            .copy_from(&t.fixed_view::<3, 3>(3, 3).into_owned());
        s.fixed_view_mut::<3, 3>(3, 3)
            .copy_from(&t.fixed_view::<3, 3>(0, 0).into_owned());
        s.fixed_view_mut::<3, 3>(0, 3)
            .copy_from(&t.fixed_view::<3, 3>(3, 0).into_owned());
        s.fixed_view_mut::<3, 3>(3, 0)
            .copy_from(&t.fixed_view::<3, 3>(0, 3).into_owned());
        CurvatureOperator::new(crate::lambda2::from_pm_basis(&s))
    }
}

/// Kulkarni–Nomizu product of symmetric bilinear forms, as an operator on Λ²:
/// (A∘B)_ijkl = A_ik B_jl + B_ik A_jl − A_il B_jk − B_il A_jk.
/// In particular g∘g = 2·Id.
pub fn kulkarni_nomizu(a: &Matrix4<f64>, b: &Matrix4<f64>) -> Matrix6<f64> {
    let mut out = Matrix6::zeros();
    for (row, &(i, j)) in LEX_PAIRS.iter().enumerate() {
        for (col, &(k, l)) in LEX_PAIRS.iter().enumerate() {
            out[(row, col)] = a[(i, k)] * b[(j, l)] + b[(i, k)] * a[(j, l)]
                - a[(i, l)] * b[(j, k)]
                - b[(i, l)] * a[(j, k)];
        }
    }
    out
}

/// Frobenius inner product of 6×6 operators.
pub fn frobenius_inner(a: &Matrix6<f64>, b: &Matrix6<f64>) -> f64 {
    (a.transpose() * b).trace()
}

/// Deterministic random curvature operator.
///
/// Draws a symmetric matrix with entries uniform in (−1, 1) and restores the
/// first Bianchi identity by shifting the three star-paired entries by a
/// third of the residual each. `Einstein` and `WeylOnly` then drop the
/// traceless-Ricci (resp. Ricci and scalar) parts.
pub fn random_curvature(seed: u64, style: RandomStyle) -> CurvatureOperator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_curvature_from(&mut rng, style)
}

/// As [`random_curvature`], drawing from a caller-owned stream.
pub fn random_curvature_from<R: Rng>(rng: &mut R, style: RandomStyle) -> CurvatureOperator {
    let mut m = Matrix6::zeros();
    for i in 0..6 {
        for j in i..6 {
            let x = rng.gen_range(-1.0..1.0);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    let op = project_bianchi(&m);
    match style {
        RandomStyle::General => op,
        RandomStyle::Einstein => {
            let d = op.decompose();
            CurvatureOperator::new(d.scalar_part + d.weyl_part)
        }
        RandomStyle::WeylOnly => {
            let d = op.decompose();
            CurvatureOperator::new(d.weyl_part)
        }
    }
}

/// Orthogonal projection of a symmetric matrix onto the Bianchi hyperplane:
/// subtract residual/3 along the signed star-paired entries.
pub fn project_bianchi(m: &Matrix6<f64>) -> CurvatureOperator {
    let mut m = *m;
    let residual = m[(0, 5)] - m[(1, 4)] + m[(2, 3)];
    let shift = residual / 3.0;
    m[(0, 5)] -= shift;
    m[(5, 0)] -= shift;
    m[(1, 4)] += shift;
    m[(4, 1)] += shift;
    m[(2, 3)] -= shift;
    m[(3, 2)] -= shift;
    CurvatureOperator::new(m)
}

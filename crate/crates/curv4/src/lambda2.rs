//! Two-form algebra on an oriented Euclidean 4-space.
//!
//! Everything downstream (curvature operators, Weyl blocks, normal forms)
//! lives on Λ²(ℝ⁴), so the basis conventions are fixed here once and reused
//! verbatim by every other module.
//!
//! # Conventions
//!
//! Basis 2-forms are indexed lexicographically and have unit norm:
//!
//! | index | form  | index | form  |
//! |-------|-------|-------|-------|
//! | 0     | e₁∧e₂ | 3     | e₂∧e₃ |
//! | 1     | e₁∧e₃ | 4     | e₂∧e₄ |
//! | 2     | e₁∧e₄ | 5     | e₃∧e₄ |
//!
//! All 6×6 matrices in this crate are written in this order. The Hodge star
//! of the standard orientation e₁∧e₂∧e₃∧e₄ acts by
//!
//! ```text
//! ⋆e₁₂ = e₃₄    ⋆e₁₃ = −e₂₄    ⋆e₁₄ = e₂₃
//! ```
//!
//! and is an involution with ±1 eigenspaces Λ± of dimension three. The
//! orthonormal eigenbases used everywhere are
//!
//! ```text
//! 𝔹⁺ = ( (e₁₂+e₃₄)/√2, (e₁₃−e₂₄)/√2, (e₁₄+e₂₃)/√2 )
//! 𝔹⁻ = ( (e₁₂−e₃₄)/√2, (e₁₃+e₂₄)/√2, (e₁₄−e₂₃)/√2 )
//! ```
//!
//! A unit 2-form ω is decomposable (ω = u∧v) iff its Plücker quantity
//! c₀c₅ − c₁c₄ + c₂c₃ vanishes, iff its self-dual and anti-self-dual parts
//! both have norm 1/√2.
//!
//! # Quaternions and SO(4)
//!
//! ℝ⁴ is identified with the quaternions by (x₁,x₂,x₃,x₄) ↦ x₁ + x₂i + x₃j + x₄k.
//! A pair of unit quaternions (p, q) acts by x ↦ p·x·q̄, which is the generic
//! element of SO(4); (p, q) and (−p, −q) give the same rotation (double cover).
//! On Λ² the induced map is block diagonal in the bases 𝔹±: the Λ⁺ block is
//! the SO(3) rotation v ↦ p·v·p̄ of p and the Λ⁻ block is the rotation of q.

use nalgebra::{Matrix3, Matrix4, Matrix6, Vector3, Vector4, Vector6};
use rand::Rng;
use thiserror::Error;

/// Index pairs (i, j), i < j, of the lexicographic basis of Λ².
pub const LEX_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Acceptance tolerance for the Plücker decomposability residual.
pub const DECOMPOSABLE_TOL: f64 = 1e-8;
/// Acceptance tolerance for orthonormality of a plane's spanning pair.
pub const PLANE_TOL: f64 = 1e-9;
/// Acceptance tolerance for unit quaternions.
pub const QUAT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum Lambda2Error {
    #[error("form is not unit: |ω| = {norm}")]
    NotUnit { norm: f64 },
    #[error("form is not decomposable: Plücker residual {residual:e}")]
    NotDecomposable { residual: f64 },
    #[error("spanning pair is not orthonormal: defect {defect:e}")]
    NotOrthonormal { defect: f64 },
    #[error("quaternion is not unit: |p| = {norm}")]
    QuaternionNotUnit { norm: f64 },
}

/// Basis index and sign of eᵢ∧eⱼ for any i ≠ j.
pub fn pair_index(i: usize, j: usize) -> (usize, f64) {
    assert!(i < 4 && j < 4 && i != j, "indices must be distinct and < 4");
    let (a, b, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
    let idx = LEX_PAIRS.iter().position(|&p| p == (a, b)).unwrap();
    (idx, sign)
}

/// Hodge star as a 6×6 matrix in the lexicographic basis.
pub fn hodge_star() -> Matrix6<f64> {
    let mut s = Matrix6::zeros();
    s[(0, 5)] = 1.0;
    s[(5, 0)] = 1.0;
    s[(1, 4)] = -1.0;
    s[(4, 1)] = -1.0;
    s[(2, 3)] = 1.0;
    s[(3, 2)] = 1.0;
    s
}

/// Orthogonal change of basis from the lexicographic basis to (𝔹⁺, 𝔹⁻):
/// columns 0..3 are 𝔹⁺, columns 3..6 are 𝔹⁻.
pub fn pm_basis() -> Matrix6<f64> {
    let r = 1.0 / 2.0_f64.sqrt();
    Matrix6::from_columns(&[
        Vector6::new(r, 0.0, 0.0, 0.0, 0.0, r),
        Vector6::new(0.0, r, 0.0, 0.0, -r, 0.0),
        Vector6::new(0.0, 0.0, r, r, 0.0, 0.0),
        Vector6::new(r, 0.0, 0.0, 0.0, 0.0, -r),
        Vector6::new(0.0, r, 0.0, 0.0, r, 0.0),
        Vector6::new(0.0, 0.0, r, -r, 0.0, 0.0),
    ])
}

/// Conjugate a 6×6 operator from the lexicographic basis into (𝔹⁺, 𝔹⁻) blocks.
pub fn to_pm_basis(m: &Matrix6<f64>) -> Matrix6<f64> {
    let p = pm_basis();
    p.transpose() * m * p
}

/// Inverse of [`to_pm_basis`].
pub fn from_pm_basis(t: &Matrix6<f64>) -> Matrix6<f64> {
    let p = pm_basis();
    p * t * p.transpose()
}

/// A 2-form on ℝ⁴, stored by its six components in the lexicographic basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoForm {
    pub c: Vector6<f64>,
}

/// Self-dual / anti-self-dual split of a 2-form.
///
/// `plus` and `minus` are the projections expressed back in the
/// lexicographic basis; `plus_coords` and `minus_coords` are their
/// coordinates in 𝔹⁺ and 𝔹⁻.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitForm {
    pub plus: TwoForm,
    pub minus: TwoForm,
    pub plus_coords: Vector3<f64>,
    pub minus_coords: Vector3<f64>,
}

impl TwoForm {
    pub fn new(c: Vector6<f64>) -> Self {
        Self { c }
    }

    /// The form eᵢ∧eⱼ for any i ≠ j.
    pub fn basis(i: usize, j: usize) -> Self {
        let (idx, sign) = pair_index(i, j);
        let mut c = Vector6::zeros();
        c[idx] = sign;
        Self { c }
    }

    pub fn norm(&self) -> f64 {
        self.c.norm()
    }

    /// Plücker quantity c₀c₅ − c₁c₄ + c₂c₃; zero iff decomposable.
    /// Equals (|ω⁺|² − |ω⁻|²)/2, and ω∧ω = 2·(this)·e₁∧e₂∧e₃∧e₄.
    pub fn plucker(&self) -> f64 {
        let c = &self.c;
        c[0] * c[5] - c[1] * c[4] + c[2] * c[3]
    }

    pub fn is_decomposable(&self, tol: f64) -> bool {
        self.plucker().abs() <= tol
    }

    pub fn star(&self) -> Self {
        Self {
            c: hodge_star() * self.c,
        }
    }

    /// Split into self-dual and anti-self-dual parts.
    pub fn split_selfdual(&self) -> SplitForm {
        let p = pm_basis();
        let coords = p.transpose() * self.c;
        let plus_coords = Vector3::new(coords[0], coords[1], coords[2]);
        let minus_coords = Vector3::new(coords[3], coords[4], coords[5]);
        let mut plus_full = Vector6::zeros();
        let mut minus_full = Vector6::zeros();
        for k in 0..3 {
            plus_full[k] = plus_coords[k];
            minus_full[k + 3] = minus_coords[k];
        }
        SplitForm {
            plus: TwoForm::new(p * plus_full),
            minus: TwoForm::new(p * minus_full),
            plus_coords,
            minus_coords,
        }
    }

    /// The skew 4×4 matrix Ω with Ω[i][j] = coefficient of eᵢ∧eⱼ.
    /// For ω = u∧v it acts by Ωx = u⟨v,x⟩ − v⟨u,x⟩.
    pub fn skew_matrix(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        for (idx, &(i, j)) in LEX_PAIRS.iter().enumerate() {
            m[(i, j)] = self.c[idx];
            m[(j, i)] = -self.c[idx];
        }
        m
    }
}

/// An oriented 2-plane in ℝ⁴, spanned by an ordered orthonormal pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    u: Vector4<f64>,
    v: Vector4<f64>,
}

impl Plane {
    /// Validates orthonormality of (u, v) within [`PLANE_TOL`].
    pub fn new(u: Vector4<f64>, v: Vector4<f64>) -> Result<Self, Lambda2Error> {
        let defect = (u.norm() - 1.0)
            .abs()
            .max((v.norm() - 1.0).abs())
            .max(u.dot(&v).abs());
        if defect > PLANE_TOL {
            return Err(Lambda2Error::NotOrthonormal { defect });
        }
        Ok(Self { u, v })
    }

    pub fn span(i: usize, j: usize) -> Self {
        let mut u = Vector4::zeros();
        let mut v = Vector4::zeros();
        u[i] = 1.0;
        v[j] = 1.0;
        Self { u, v }
    }

    pub fn basis(&self) -> (Vector4<f64>, Vector4<f64>) {
        (self.u, self.v)
    }

    /// Orthogonal projector uuᵀ + vvᵀ onto the plane. Orientation-free, so
    /// two planes are equal as subspaces iff their projectors coincide.
    pub fn projector(&self) -> Matrix4<f64> {
        self.u * self.u.transpose() + self.v * self.v.transpose()
    }
}

/// The unit decomposable form u∧v of an oriented plane.
pub fn plane_to_form(p: &Plane) -> TwoForm {
    let (u, v) = p.basis();
    let mut c = Vector6::zeros();
    for (idx, &(i, j)) in LEX_PAIRS.iter().enumerate() {
        c[idx] = u[i] * v[j] - u[j] * v[i];
    }
    TwoForm::new(c)
}

/// Recover the oriented plane of a unit decomposable 2-form.
///
/// The first spanning vector is the normalized image under Ω of the earliest
/// standard basis vector not in the kernel of Ω; the second is −Ω applied to
/// the first. This makes the result deterministic and orientation-exact:
/// `plane_to_form(form_to_plane(ω)) = ω` for exactly decomposable ω.
pub fn form_to_plane(w: &TwoForm) -> Result<Plane, Lambda2Error> {
    let norm = w.norm();
    if (norm - 1.0).abs() > DECOMPOSABLE_TOL {
        return Err(Lambda2Error::NotUnit { norm });
    }
    let residual = w.plucker().abs();
    if residual > DECOMPOSABLE_TOL {
        return Err(Lambda2Error::NotDecomposable { residual });
    }
    let omega = w.skew_matrix();
    let col = (0..4)
        .map(|k| omega.column(k).into_owned())
        .find(|c| c.norm() > 1e-6)
        .expect("a unit form has a column of norm ≥ 1/√2");
    let u = col.normalize();
    let mut v = -omega * u;
    // One Gram–Schmidt pass absorbs the decomposability defect of the input.
    v -= u * u.dot(&v);
    v = v.normalize();
    Plane::new(u, v).map_err(|_| Lambda2Error::NotDecomposable { residual })
}

/// The orthogonal complement plane, oriented so that
/// ω_P ∧ ω_P⊥ is a positive multiple of the volume form;
/// equivalently plane_to_form(complement) = ⋆plane_to_form(P).
pub fn orthogonal_complement(p: &Plane) -> Plane {
    let starred = plane_to_form(p).star();
    form_to_plane(&starred).expect("star of a unit decomposable form is unit decomposable")
}

/// A quaternion w + xi + yj + zk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion {
        w: 1.0,
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn normalize(&self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    pub fn mul(&self, o: &Quaternion) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }

    /// Flip sign so the first component of (w, x, y, z) larger than 1e-12
    /// in magnitude is positive. Fixes the lift of the 2:1 cover.
    pub fn canonical_sign(&self) -> Self {
        for c in [self.w, self.x, self.y, self.z] {
            if c.abs() > 1e-12 {
                return if c < 0.0 {
                    Self::new(-self.w, -self.x, -self.y, -self.z)
                } else {
                    *self
                };
            }
        }
        *self
    }

    /// Rotation matrix of v ↦ p·v·p̄ on Im ℍ ≅ ℝ³ for unit p.
    pub fn rot3(&self) -> Matrix3<f64> {
        let (w, x, y, z) = (self.w, self.x, self.y, self.z);
        Matrix3::new(
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - w * z),
            2.0 * (x * z + w * y),
            2.0 * (x * y + w * z),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - w * x),
            2.0 * (x * z - w * y),
            2.0 * (y * z + w * x),
            1.0 - 2.0 * (x * x + y * y),
        )
    }

    /// Lift of a rotation matrix, sign-canonicalized (Shepperd's method).
    pub fn from_rot3(r: &Matrix3<f64>) -> Self {
        let t = r.trace();
        let q = if t > 0.0 {
            let s = (t + 1.0).sqrt() * 2.0;
            Self::new(
                0.25 * s,
                (r[(2, 1)] - r[(1, 2)]) / s,
                (r[(0, 2)] - r[(2, 0)]) / s,
                (r[(1, 0)] - r[(0, 1)]) / s,
            )
        } else if r[(0, 0)] > r[(1, 1)] && r[(0, 0)] > r[(2, 2)] {
            let s = (1.0 + r[(0, 0)] - r[(1, 1)] - r[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (r[(2, 1)] - r[(1, 2)]) / s,
                0.25 * s,
                (r[(0, 1)] + r[(1, 0)]) / s,
                (r[(0, 2)] + r[(2, 0)]) / s,
            )
        } else if r[(1, 1)] > r[(2, 2)] {
            let s = (1.0 + r[(1, 1)] - r[(0, 0)] - r[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (r[(0, 2)] - r[(2, 0)]) / s,
                (r[(0, 1)] + r[(1, 0)]) / s,
                0.25 * s,
                (r[(1, 2)] + r[(2, 1)]) / s,
            )
        } else {
            let s = (1.0 + r[(2, 2)] - r[(0, 0)] - r[(1, 1)]).sqrt() * 2.0;
            Self::new(
                (r[(1, 0)] - r[(0, 1)]) / s,
                (r[(0, 2)] + r[(2, 0)]) / s,
                (r[(1, 2)] + r[(2, 1)]) / s,
                0.25 * s,
            )
        };
        q.normalize().canonical_sign()
    }

    pub fn random_unit<R: Rng>(rng: &mut R) -> Self {
        loop {
            let q = Self::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            let n = q.norm();
            if n > 0.1 && n <= 1.0 {
                return q.normalize();
            }
        }
    }
}

/// An orientation-preserving orthogonal frame change of ℝ⁴, x ↦ p·x·q̄.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameRotation {
    p: Quaternion,
    q: Quaternion,
    m: Matrix4<f64>,
}

/// Left multiplication matrix of p on ℍ ≅ ℝ⁴.
fn left_mul(p: &Quaternion) -> Matrix4<f64> {
    Matrix4::new(
        p.w, -p.x, -p.y, -p.z, //
        p.x, p.w, -p.z, p.y, //
        p.y, p.z, p.w, -p.x, //
        p.z, -p.y, p.x, p.w,
    )
}

/// Right multiplication matrix of q on ℍ ≅ ℝ⁴.
fn right_mul(q: &Quaternion) -> Matrix4<f64> {
    Matrix4::new(
        q.w, -q.x, -q.y, -q.z, //
        q.x, q.w, q.z, -q.y, //
        q.y, -q.z, q.w, q.x, //
        q.z, q.y, -q.x, q.w,
    )
}

impl FrameRotation {
    pub fn identity() -> Self {
        Self {
            p: Quaternion::ONE,
            q: Quaternion::ONE,
            m: Matrix4::identity(),
        }
    }

    /// Requires |p| = |q| = 1 within [`QUAT_TOL`].
    pub fn from_quaternions(p: Quaternion, q: Quaternion) -> Result<Self, Lambda2Error> {
        for quat in [&p, &q] {
            let norm = quat.norm();
            if (norm - 1.0).abs() > QUAT_TOL {
                return Err(Lambda2Error::QuaternionNotUnit { norm });
            }
        }
        let m = left_mul(&p) * right_mul(&q.conjugate());
        Ok(Self { p, q, m })
    }

    pub fn random<R: Rng>(rng: &mut R) -> Self {
        let p = Quaternion::random_unit(rng);
        let q = Quaternion::random_unit(rng);
        Self::from_quaternions(p, q).expect("random unit quaternions")
    }

    pub fn quaternions(&self) -> (Quaternion, Quaternion) {
        (self.p, self.q)
    }

    /// The 4×4 rotation matrix; its columns are the images of the standard
    /// basis, i.e. the rotated frame.
    pub fn matrix(&self) -> Matrix4<f64> {
        self.m
    }

    /// Induced orthogonal action on Λ² in the lexicographic basis:
    /// column (i,j) holds the components of (Meᵢ)∧(Meⱼ).
    pub fn induced_lambda2(&self) -> Matrix6<f64> {
        let mut out = Matrix6::zeros();
        for (col, &(i, j)) in LEX_PAIRS.iter().enumerate() {
            for (row, &(k, l)) in LEX_PAIRS.iter().enumerate() {
                out[(row, col)] = self.m[(k, i)] * self.m[(l, j)] - self.m[(k, j)] * self.m[(l, i)];
            }
        }
        out
    }
}

/// The SO(4) element x ↦ p·x·q̄ of a unit quaternion pair.
pub fn so4_from_quaternions(p: Quaternion, q: Quaternion) -> Result<FrameRotation, Lambda2Error> {
    FrameRotation::from_quaternions(p, q)
}

//! Closed-form catalog of the standard positive-curvature model spaces
//! with their volumes, quotient data, characteristic numbers, and
//! curvature integrands.
//!
//! | kind   | params     | curvature (lex basis)            | volume        | (χ, τ) |
//! |--------|------------|----------------------------------|---------------|--------|
//! | sphere4 | [r]        | (1/r²)·Id                        | (8π²/3)r⁴     | (2, 0) |
//! | rp4    | [r]        | (1/r²)·Id                        | (8π²/3)r⁴ *   | (1, 0) |
//! | cp2    | [S]        | Fubini–Study, scalar S           | (π²/2)(24/S)² | (3, 1) |
//! | product_s2s2 | [r₁, r₂] | diag(1/r₁², 0, 0, 0, 0, 1/r₂²)   | 16π²r₁²r₂²    | (4, 0) |
//!
//! (*) For the quotient, `volume` is the volume of the universal cover
//! (the full sphere); the characteristic-number formulas divide by
//! `quotient_factor`, so χ = ∫gb/(8π²·q) comes out right with cover
//! volume and q = 2. The integrands are constant on these homogeneous
//! spaces, so integration is multiplication by the volume.

use crate::curvature::CurvatureOperator;
use crate::lambda2::from_pm_basis;
use nalgebra::Matrix6;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Sphere,
    RealProjective,
    ComplexProjective,
    ProductSpheres,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ModelKind::Sphere => "sphere4",
            ModelKind::RealProjective => "rp4",
            ModelKind::ComplexProjective => "cp2",
            ModelKind::ProductSpheres => "product_s2s2",
        };
        f.write_str(name)
    }
}

impl FromStr for ModelKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, ModelError> {
        match s {
            "sphere4" => Ok(ModelKind::Sphere),
            "rp4" => Ok(ModelKind::RealProjective),
            "cp2" => Ok(ModelKind::ComplexProjective),
            "product_s2s2" => Ok(ModelKind::ProductSpheres),
            other => Err(ModelError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("unknown model kind {0:?}, expected sphere4 | rp4 | cp2 | product_s2s2")]
    UnknownKind(String),
    #[error("model {kind} expects {expected}, got {got} parameter(s)")]
    BadParams {
        kind: ModelKind,
        expected: &'static str,
        got: usize,
    },
    #[error("model parameter {name} must be positive, got {value}")]
    NonPositiveParam { name: &'static str, value: f64 },
}

/// A catalog model: its curvature tensor plus the global data a pointwise
/// tensor cannot carry.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpace {
    pub kind: ModelKind,
    pub params: Vec<f64>,
    pub curvature: CurvatureOperator,
    /// Riemannian volume of the universal cover; quotients pair it with
    /// `quotient_factor` in the characteristic-number formulas.
    pub volume: f64,
    pub quotient_factor: u32,
    pub known_chi: i64,
    pub known_tau: i64,
    /// First nonzero Laplacian eigenvalue (closed form for every model).
    pub lambda1: Option<f64>,
}

fn positive(name: &'static str, value: f64) -> Result<f64, ModelError> {
    if value <= 0.0 {
        return Err(ModelError::NonPositiveParam { name, value });
    }
    Ok(value)
}

fn expect_len(
    kind: ModelKind,
    params: &[f64],
    n: usize,
    expected: &'static str,
) -> Result<(), ModelError> {
    if params.len() != n {
        return Err(ModelError::BadParams {
            kind,
            expected,
            got: params.len(),
        });
    }
    Ok(())
}

/// Build a catalog model from its parameters.
pub fn model(kind: ModelKind, params: &[f64]) -> Result<ModelSpace, ModelError> {
    match kind {
        ModelKind::Sphere | ModelKind::RealProjective => {
            expect_len(kind, params, 1, "one radius [r]")?;
            let r = positive("r", params[0])?;
            let quotient = if kind == ModelKind::Sphere { 1 } else { 2 };
            let (chi, lambda1) = if kind == ModelKind::Sphere {
                (2, 4.0 / (r * r))
            } else {
                (1, 10.0 / (r * r))
            };
            Ok(ModelSpace {
                kind,
                params: params.to_vec(),
                curvature: CurvatureOperator::new(Matrix6::identity() / (r * r)),
                volume: 8.0 * PI * PI / 3.0 * r.powi(4),
                quotient_factor: quotient,
                known_chi: chi,
                known_tau: 0,
                lambda1: Some(lambda1),
            })
        }
        ModelKind::ComplexProjective => {
            expect_len(kind, params, 1, "one scalar curvature [S]")?;
            let s = positive("S", params[0])?;
            // Self-dual block diag(0, 0, S/4) + S/12 on the anti-self-dual
            // half; the Kähler form spans the S/4 eigendirection.
            let mut t = Matrix6::zeros();
            t[(2, 2)] = s / 4.0;
            t[(3, 3)] = s / 12.0;
            t[(4, 4)] = s / 12.0;
            t[(5, 5)] = s / 12.0;
            Ok(ModelSpace {
                kind,
                params: params.to_vec(),
                curvature: CurvatureOperator::new(from_pm_basis(&t)),
                volume: PI * PI / 2.0 * (24.0 / s).powi(2),
                quotient_factor: 1,
                known_chi: 3,
                known_tau: 1,
                lambda1: Some(s / 2.0),
            })
        }
        ModelKind::ProductSpheres => {
            expect_len(kind, params, 2, "two radii [r1, r2]")?;
            let r1 = positive("r1", params[0])?;
            let r2 = positive("r2", params[1])?;
            let mut m = Matrix6::zeros();
            m[(0, 0)] = 1.0 / (r1 * r1);
            m[(5, 5)] = 1.0 / (r2 * r2);
            Ok(ModelSpace {
                kind,
                params: params.to_vec(),
                curvature: CurvatureOperator::new(m),
                volume: 16.0 * PI * PI * r1 * r1 * r2 * r2,
                quotient_factor: 1,
                known_chi: 4,
                known_tau: 0,
                lambda1: Some(2.0 / r1.max(r2).powi(2)),
            })
        }
    }
}

impl ModelSpace {
    /// The same model under the homothety multiplying curvature by c > 0
    /// (radius-like parameters shrink by √c, volume by c², λ₁ grows by c).
    /// Characteristic numbers are unchanged.
    pub fn scaled(&self, c: f64) -> Result<ModelSpace, ModelError> {
        let c = positive("scale", c)?;
        let params: Vec<f64> = match self.kind {
            ModelKind::ComplexProjective => self.params.iter().map(|s| s * c).collect(),
            _ => self.params.iter().map(|r| r / c.sqrt()).collect(),
        };
        model(self.kind, &params)
    }
}

/// Gauss–Bonnet–Chern integrand |W|² − ½|Ric₀|² + S²/24 of a tensor, with
/// |W|² the squared Frobenius norm of the 6×6 Weyl part and |Ric₀|² that
/// of the traceless Ricci 4×4.
pub fn gb_integrand(r: &CurvatureOperator) -> f64 {
    let d = r.decompose();
    d.weyl_part.norm_squared() - 0.5 * d.ricci.traceless().norm_squared()
        + d.scalar * d.scalar / 24.0
}

/// Hirzebruch signature integrand |W⁺|² − |W⁻|² of a tensor (squared
/// Frobenius norms of the 3×3 Weyl blocks).
pub fn signature_integrand(r: &CurvatureOperator) -> f64 {
    let w = r.weyl_blocks();
    w.plus.norm_squared() - w.minus.norm_squared()
}

/// Report of [`invariants`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantReport {
    pub gb_integrand: f64,
    pub signature_integrand: f64,
    /// gb·vol/(8π²·quotient); matches the known Euler number.
    pub chi: f64,
    /// sig·vol/(12π²·quotient); matches the known signature.
    pub tau: f64,
    pub weyl_plus_norm_sq: f64,
    pub weyl_minus_norm_sq: f64,
    /// Smallest eigenvalue of the Weitzenbock 2-form term S/3 − 2W.
    pub r2_min_eigenvalue: f64,
    /// r2_min_eigenvalue ≥ −1e-10: nonnegative isotropic curvature.
    pub isotropic_nonneg: bool,
}

/// Evaluate both characteristic-number integrands of a model and
/// integrate them (the models are homogeneous, so integration is
/// multiplication by the volume, divided by the quotient order).
pub fn invariants(m: &ModelSpace) -> InvariantReport {
    invariants_of(&m.curvature, m.volume, m.quotient_factor)
}

/// [`invariants`] for a bare homogeneous tensor with known volume and
/// quotient order; lets externally supplied tensors reuse the catalog
/// arithmetic.
pub fn invariants_of(r: &CurvatureOperator, volume: f64, quotient_factor: u32) -> InvariantReport {
    let gb = gb_integrand(r);
    let sig = signature_integrand(r);
    let q = quotient_factor as f64;
    let w = r.weyl_blocks();
    let r2_min = r.weitzenbock_r2().spectrum[0];
    InvariantReport {
        gb_integrand: gb,
        signature_integrand: sig,
        chi: gb * volume / (8.0 * PI * PI * q),
        tau: sig * volume / (12.0 * PI * PI * q),
        weyl_plus_norm_sq: w.plus.norm_squared(),
        weyl_minus_norm_sq: w.minus.norm_squared(),
        r2_min_eigenvalue: r2_min,
        isotropic_nonneg: r2_min >= -1e-10,
    }
}

//! Sectional-curvature gap bounds for Einstein metrics normalized to
//! Rc = g, and the contradiction pipeline ruling out positive-definite
//! intersection forms under them.
//!
//! Normalization: Rc = g forces S = 4, and all sectional curvatures are
//! measured against the bound K ≤ α ≤ 1. The two pillars:
//!
//! - the gap bound: K ≤ α implies K ≥ β(α) with
//!   β(α) = (15 − 8α − √3·√(96α² − 80α + 19)) / 28, sharp on the
//!   symmetric model spaces (β(1/3) = 1/3 on the sphere, β(2/3) = 1/6 on
//!   the complex projective plane);
//! - the Euler bound: 8π²χ ≤ c(α, β)·Vol with
//!   c(α, β) = 8(α² − (1 − β)(α + β)) + 10/3.
//!
//! When the intersection form is positive definite, Gauss–Bonnet–Chern and
//! Hirzebruch signature combine with the Euler bound into
//! (2 − 4/c)χ ≥ 3|τ| ≥ χ, which needs c ≥ 4; any c < 4 is a
//! contradiction, ruling such manifolds out.

use crate::curvature::CurvatureOperator;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EinsteinError {
    #[error("alpha = {0} exceeds the normalized sectional bound 1")]
    OutOfRange(f64),
    #[error("kmin bound beta = {beta} exceeds kmax = {alpha}; no metric realizes the pair")]
    OrderViolation { alpha: f64, beta: f64 },
    #[error("tensor is not Einstein: |Ric0| = {ric0_norm:e}")]
    NotEinstein { ric0_norm: f64 },
    #[error("scalar curvature must be positive, got {s}")]
    NonPositiveScalar { s: f64 },
}

/// Lower sectional bound β(α) for an Einstein metric with Rc = g and
/// K ≤ α ≤ 1. The radicand 96α² − 80α + 19 has negative discriminant, so
/// the square root is always defined; only α > 1 is rejected. Values of
/// α below 1/3 return β > α, which downstream consumers reject as an
/// ordering violation (no Einstein metric has all sectionals below 1/3
/// under this normalization).
pub fn kmin_from_kmax(alpha: f64) -> Result<f64, EinsteinError> {
    if alpha > 1.0 {
        return Err(EinsteinError::OutOfRange(alpha));
    }
    let radicand = 96.0 * alpha * alpha - 80.0 * alpha + 19.0;
    Ok((15.0 - 8.0 * alpha - 3.0_f64.sqrt() * radicand.sqrt()) / 28.0)
}

/// Coefficient c(α, β) in the volume upper bound 8π²χ ≤ c·Vol for an
/// Einstein metric with Rc = g and β ≤ K ≤ α.
pub fn euler_upper_coefficient(alpha: f64, beta: f64) -> Result<f64, EinsteinError> {
    if beta > alpha + 1e-12 {
        return Err(EinsteinError::OrderViolation { alpha, beta });
    }
    Ok(8.0 * (alpha * alpha - (1.0 - beta) * (alpha + beta)) + 10.0 / 3.0)
}

/// Report of [`positive_intersection_contradiction`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContradictionReport {
    /// Hypothesized sectional upper bound K ≤ α (with Rc = g).
    pub alpha: f64,
    /// Gap lower bound β(α).
    pub beta: f64,
    /// Euler coefficient c(α, β(α)).
    pub euler_coefficient: f64,
    /// 4/c, a lower bound for both (2χ − 3τ)/χ and (2χ + 3τ)/χ.
    pub ratio_lower: f64,
    /// 2 − 4/c; a positive-definite intersection form forces this ≥ 1.
    pub endpoint: f64,
    /// c < 4, i.e. endpoint < 1: the hypotheses admit no such manifold.
    pub contradiction: bool,
}

/// Run the full chain for an Einstein 4-manifold with Rc = g, K ≤ α, and
/// positive-definite intersection form:
///
/// 1. β = β(α) bounds the sectionals below, c = c(α, β) bounds the Euler
///    number above by (c/8π²)·Vol;
/// 2. 2χ ± 3τ = (1/4π²)∫(2|W∓|² + S²/24) ≥ Vol/2π², since definiteness
///    makes both Weyl halves retainable and S = 4;
/// 3. hence (2 − 4/c)χ ≥ 3|τ| = 3b₊ ≥ 2 + b₊ = χ, forcing c ≥ 4.
///
/// A coefficient c < 4 therefore contradicts the hypotheses.
pub fn positive_intersection_contradiction(
    alpha: f64,
) -> Result<ContradictionReport, EinsteinError> {
    let beta = kmin_from_kmax(alpha)?;
    let euler_coefficient = euler_upper_coefficient(alpha, beta)?;
    let ratio_lower = 4.0 / euler_coefficient;
    Ok(ContradictionReport {
        alpha,
        beta,
        euler_coefficient,
        ratio_lower,
        endpoint: 2.0 - ratio_lower,
        contradiction: euler_coefficient < 4.0,
    })
}

/// Report of [`weyl_gap_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylGapReport {
    pub s: f64,
    /// |W⁺|² in the Frobenius norm of the self-dual 3×3 block.
    pub weyl_plus_norm_sq: f64,
    /// S²/24.
    pub bound: f64,
    /// W⁺ ≠ 0; the gap claims nothing for half conformally flat tensors.
    pub applicable: bool,
    /// `None` when not applicable.
    pub holds: Option<bool>,
    /// weyl_plus_norm_sq − bound.
    pub margin: f64,
}

/// Check the gap |W⁺|² ≥ S²/24 satisfied by every Einstein 4-manifold
/// with S > 0 and W⁺ ≠ 0, with equality exactly on the standard complex
/// projective plane and the product of equal-radius spheres.
pub fn weyl_gap_check(r: &CurvatureOperator) -> Result<WeylGapReport, EinsteinError> {
    let ric0_norm = r.ricci_contract().traceless().norm();
    if ric0_norm > 1e-9 {
        return Err(EinsteinError::NotEinstein { ric0_norm });
    }
    let s = r.scalar();
    if s <= 0.0 {
        return Err(EinsteinError::NonPositiveScalar { s });
    }
    let w = r.weyl_blocks();
    let weyl_plus_norm_sq = w.plus.norm_squared();
    let bound = s * s / 24.0;
    let applicable = weyl_plus_norm_sq.sqrt() > 1e-9;
    Ok(WeylGapReport {
        s,
        weyl_plus_norm_sq,
        bound,
        applicable,
        holds: applicable.then_some(weyl_plus_norm_sq >= bound - 1e-10 * (1.0 + bound)),
        margin: weyl_plus_norm_sq - bound,
    })
}

//! Pinching thresholds and executable checkers for the pointwise
//! inequalities behind the definiteness results.
//!
//! Notation used throughout this module:
//!
//! | symbol | meaning |
//! |--------|---------|
//! | S      | scalar curvature, `2·tr` of the operator |
//! | λ₁     | first Laplacian eigenvalue (spectral input, never computed) |
//! | k      | Ricci lower bound (operator inequality Rc ≥ k·g) |
//! | λ₃^±   | largest eigenvalue of the (anti-)self-dual Weyl block |
//! | δ      | max of the biorthogonal curvature K⊥ over all planes |
//!
//! The central threshold is
//!
//! ```text
//! T(S, λ₁) = S(2S + 9λ₁) / (12(S + 3λ₁)),
//! ```
//!
//! strictly below S/4 with gap S²/(12(S+3λ₁)) and increasing in both
//! arguments. The four pinching conditions, the three lemma bounds on
//! λ₃^±, the determinant bound, the implication lemma, and the
//! discriminant certificates are each exposed as a checker returning a
//! report with measured values, bounds, and pass flags; nothing is
//! asserted outside a checker's hypothesis.

use crate::curvature::{kulkarni_nomizu, CurvatureOperator};
use crate::extremes::{kperp_extremes_closed_form, sectional_extremes_optimize, Target};
use crate::lambda2::from_pm_basis;
use crate::linalg::sorted_symmetric_eigen3;
use nalgebra::{Matrix3, Matrix4, Matrix6, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Equality slack for pass/fail decisions on the condition inequalities.
pub const PASS_TOL: f64 = 1e-10;
/// Tolerance for "equality attained" and "norm is zero" reporting.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum PinchingError {
    #[error("{name} must be positive, got {value}")]
    NonPositiveInput { name: &'static str, value: f64 },
    #[error("scalar curvature must be positive, got {s}")]
    NonPositiveScalar { s: f64 },
    #[error("condition (2) requires the Ricci lower bound k")]
    MissingK,
    #[error("unknown condition id {0}, expected 1..=4")]
    UnknownCondition(u8),
    #[error("context inconsistent: lambda1 = {lambda1} is below the Lichnerowicz bound 4k/3 = {required}")]
    InconsistentContext { lambda1: f64, required: f64 },
    #[error("matrix is not traceless: trace = {trace:e}")]
    NotTraceless { trace: f64 },
}

/// Spectral data of the underlying manifold that a pointwise tensor cannot
/// know: the first Laplacian eigenvalue and an optional Ricci lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralContext {
    pub lambda1: f64,
    pub k: Option<f64>,
}

impl SpectralContext {
    pub fn new(lambda1: f64) -> Result<Self, PinchingError> {
        if lambda1 <= 0.0 {
            return Err(PinchingError::NonPositiveInput {
                name: "lambda1",
                value: lambda1,
            });
        }
        Ok(Self { lambda1, k: None })
    }

    pub fn with_k(lambda1: f64, k: f64) -> Result<Self, PinchingError> {
        let mut ctx = Self::new(lambda1)?;
        if k <= 0.0 {
            return Err(PinchingError::NonPositiveInput {
                name: "k",
                value: k,
            });
        }
        ctx.k = Some(k);
        Ok(ctx)
    }

    fn require_k(&self) -> Result<f64, PinchingError> {
        self.k.ok_or(PinchingError::MissingK)
    }
}

/// The pinching threshold S(2S+9λ₁)/(12(S+3λ₁)).
pub fn threshold(s: f64, lambda1: f64) -> Result<f64, PinchingError> {
    if s <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "S",
            value: s,
        });
    }
    if lambda1 <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "lambda1",
            value: lambda1,
        });
    }
    Ok(s * (2.0 * s + 9.0 * lambda1) / (12.0 * (s + 3.0 * lambda1)))
}

/// Lower bound 4k/3 on λ₁ given Rc ≥ k > 0 (Lichnerowicz in dimension 4).
pub fn lichnerowicz_lower(k: f64) -> Result<f64, PinchingError> {
    if k <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "k",
            value: k,
        });
    }
    Ok(4.0 * k / 3.0)
}

/// Which curvature function of a plane the condition checker measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PinchMode {
    /// Closed-form biorthogonal extremes (the conditions as stated).
    Biorthogonal,
    /// Ordinary sectional extremes by the multistart optimizer (a strictly
    /// stronger reading; passing here implies passing biorthogonally).
    Sectional,
}

/// One condition's evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionCheck {
    /// Condition id 1..=4.
    pub id: u8,
    /// The bound the measured value is compared against.
    pub threshold: f64,
    /// The measured curvature extreme.
    pub measured: f64,
    /// True when the bound is an upper bound (measured ≤ threshold).
    pub upper: bool,
    pub pass: bool,
}

/// Full report of [`check_conditions`].
#[derive(Debug, Clone, PartialEq)]
pub struct PinchReport {
    pub s: f64,
    pub lambda1: f64,
    pub k: Option<f64>,
    pub mode: PinchMode,
    /// Max of the mode's curvature over planes.
    pub kmax: f64,
    /// Min of the mode's curvature over planes.
    pub kmin: f64,
    /// Smallest Ricci eigenvalue (the operator reading of Rc ≥ k).
    pub ricci_min: f64,
    pub conditions: Vec<ConditionCheck>,
    pub any_pass: bool,
}

fn mode_extremes(r: &CurvatureOperator, mode: PinchMode) -> (f64, f64) {
    match mode {
        PinchMode::Biorthogonal => {
            let kp = kperp_extremes_closed_form(r);
            (kp.min.value, kp.max.value)
        }
        PinchMode::Sectional => (
            sectional_extremes_optimize(r, Target::Min, 0).value,
            sectional_extremes_optimize(r, Target::Max, 0).value,
        ),
    }
}

/// Evaluate the four pinching conditions:
///
/// 1. K_max ≤ T(S, λ₁);
/// 2. Rc ≥ k and K_max ≤ (5/6)k;
/// 3. K_min ≥ S²/(24(S + 3λ₁));
/// 4. K_min ≥ [S/(2(2S + 9λ₁))]·K_max;
///
/// with K the mode's curvature. Conditions are read within [`PASS_TOL`].
/// Condition 2 is skipped when the context has no k; use
/// [`check_selected_conditions`] to demand it explicitly.
pub fn check_conditions(
    r: &CurvatureOperator,
    ctx: &SpectralContext,
    mode: PinchMode,
) -> Result<PinchReport, PinchingError> {
    if ctx.k.is_some() {
        check_selected_conditions(r, ctx, mode, &[1, 2, 3, 4])
    } else {
        check_selected_conditions(r, ctx, mode, &[1, 3, 4])
    }
}

/// [`check_conditions`] restricted to the given condition ids (1..=4).
pub fn check_selected_conditions(
    r: &CurvatureOperator,
    ctx: &SpectralContext,
    mode: PinchMode,
    ids: &[u8],
) -> Result<PinchReport, PinchingError> {
    let s = r.scalar();
    if s <= 0.0 {
        return Err(PinchingError::NonPositiveScalar { s });
    }
    if ctx.lambda1 <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "lambda1",
            value: ctx.lambda1,
        });
    }
    let lambda1 = ctx.lambda1;
    let (kmin, kmax) = mode_extremes(r, mode);
    let ricci_min = r.ricci_contract().min_eigenvalue();
    let mut conditions = Vec::with_capacity(ids.len());
    for &id in ids {
        let check = match id {
            1 => {
                let t = threshold(s, lambda1)?;
                ConditionCheck {
                    id,
                    threshold: t,
                    measured: kmax,
                    upper: true,
                    pass: kmax <= t + PASS_TOL,
                }
            }
            2 => {
                let k = ctx.require_k()?;
                if k <= 0.0 {
                    return Err(PinchingError::NonPositiveInput {
                        name: "k",
                        value: k,
                    });
                }
                let t = 5.0 * k / 6.0;
                let ricci_ok = ricci_min >= k - PASS_TOL;
                ConditionCheck {
                    id,
                    threshold: t,
                    measured: kmax,
                    upper: true,
                    pass: ricci_ok && kmax <= t + PASS_TOL,
                }
            }
            3 => {
                let t = s * s / (24.0 * (s + 3.0 * lambda1));
                ConditionCheck {
                    id,
                    threshold: t,
                    measured: kmin,
                    upper: false,
                    pass: kmin >= t - PASS_TOL,
                }
            }
            4 => {
                let t = s / (2.0 * (2.0 * s + 9.0 * lambda1)) * kmax;
                ConditionCheck {
                    id,
                    threshold: t,
                    measured: kmin,
                    upper: false,
                    pass: kmin >= t - PASS_TOL,
                }
            }
            other => return Err(PinchingError::UnknownCondition(other)),
        };
        conditions.push(check);
    }
    let any_pass = conditions.iter().any(|c| c.pass);
    Ok(PinchReport {
        s,
        lambda1,
        k: ctx.k,
        mode,
        kmax,
        kmin,
        ricci_min,
        conditions,
        any_pass,
    })
}

/// One inequality, convention lhs ≥ rhs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
}

impl InequalityCheck {
    fn of(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs >= rhs - PASS_TOL,
            equality: (lhs - rhs).abs() <= EQUALITY_TOL,
        }
    }
}

/// The three pointwise bounds tying λ₃^± to δ = max K⊥.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaBoundsReport {
    /// δ = max K⊥ (closed form).
    pub delta: f64,
    /// 2S/3 − 2λ₃⁺ − 2λ₃⁻ ≥ S − 4δ. Exact equality by the closed form.
    pub sum_identity: InequalityCheck,
    /// 2(δ − S/12) ≥ |λ₃⁺ − λ₃⁻|. Equality iff one Weyl half vanishes.
    pub gap_bound: InequalityCheck,
    /// S/3 − 2λ₃⁺ ≥ 2S/3 − 4δ. Equality iff λ₃⁻ = 0.
    pub single_plus: InequalityCheck,
    /// S/3 − 2λ₃⁻ ≥ 2S/3 − 4δ. Equality iff λ₃⁺ = 0.
    pub single_minus: InequalityCheck,
    /// |W⁺|·|W⁻| (Frobenius norms of the Weyl blocks).
    pub weyl_product: f64,
    /// weyl_product ≤ [`EQUALITY_TOL`].
    pub weyl_product_zero: bool,
    /// Equality attained in the gap bound and one single bound; happens
    /// exactly when `weyl_product_zero` (tested as an iff).
    pub equality_last_two: bool,
}

/// Evaluate the three λ₃^± bounds of a curvature operator.
pub fn lemma_bounds(r: &CurvatureOperator) -> LemmaBoundsReport {
    let s = r.scalar();
    let w = r.weyl_blocks();
    let (l3p, l3m) = (w.spectrum_plus[2], w.spectrum_minus[2]);
    let delta = kperp_extremes_closed_form(r).max.value;
    let sum_identity = InequalityCheck::of(2.0 * s / 3.0 - 2.0 * l3p - 2.0 * l3m, s - 4.0 * delta);
    let gap_bound = InequalityCheck::of(2.0 * (delta - s / 12.0), (l3p - l3m).abs());
    let single_plus = InequalityCheck::of(s / 3.0 - 2.0 * l3p, 2.0 * s / 3.0 - 4.0 * delta);
    let single_minus = InequalityCheck::of(s / 3.0 - 2.0 * l3m, 2.0 * s / 3.0 - 4.0 * delta);
    let weyl_product = w.plus.norm() * w.minus.norm();
    let weyl_product_zero = weyl_product <= EQUALITY_TOL;
    let equality_last_two = gap_bound.equality && (single_plus.equality || single_minus.equality);
    LemmaBoundsReport {
        delta,
        sum_identity,
        gap_bound,
        single_plus,
        single_minus,
        weyl_product,
        weyl_product_zero,
        equality_last_two,
    }
}

/// Determinant bound of a traceless symmetric 3×3 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetBoundReport {
    /// Ascending eigenvalues.
    pub spectrum: Vector3<f64>,
    /// 6λ₃|W|².
    pub lhs: f64,
    /// 36·det(W).
    pub rhs: f64,
    /// rhs ≤ lhs.
    pub holds: bool,
    /// lhs − rhs − 12λ₃(λ₁ − λ₂)²; zero identically for traceless input.
    pub identity_residual: f64,
    /// Equality attained (⟺ λ₁ = λ₂ or λ₃ = 0).
    pub equality: bool,
}

/// Check 36·det(W) ≤ 6λ₃|W|² for a traceless symmetric matrix, together
/// with the proof identity 6λ₃|W|² − 36·det(W) = 12λ₃(λ₁−λ₂)². Only the
/// symmetric part of the input is read.
pub fn det_bound(w: &Matrix3<f64>) -> Result<DetBoundReport, PinchingError> {
    let ws = (w + w.transpose()) / 2.0;
    let trace = ws.trace();
    if trace.abs() > 1e-10 {
        return Err(PinchingError::NotTraceless { trace });
    }
    let (spectrum, _) = sorted_symmetric_eigen3(&ws);
    let l3 = spectrum[2];
    let lhs = 6.0 * l3 * ws.norm_squared();
    // Determinant via LU, an independent route from the eigensolver.
    let rhs = 36.0 * ws.determinant();
    let scale = 1.0 + lhs.abs() + rhs.abs();
    let identity_residual = lhs - rhs - 12.0 * l3 * (spectrum[0] - spectrum[1]).powi(2);
    Ok(DetBoundReport {
        spectrum,
        lhs,
        rhs,
        holds: rhs <= lhs + PASS_TOL * scale,
        identity_residual,
        equality: (lhs - rhs).abs() <= EQUALITY_TOL * scale,
    })
}

/// One hypothesis branch of the implication lemma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchCheck {
    pub id: u8,
    /// False when the branch needs k and the context has none.
    pub evaluated: bool,
    pub holds: bool,
    pub measured: f64,
    pub bound: f64,
}

/// Report of [`lemma27_implication`]: which hypothesis branches hold and
/// whether the concluded threshold bound does.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma27Report {
    pub branches: [BranchCheck; 3],
    /// Some branch holds, so the conclusion is asserted.
    pub applicable: bool,
    /// δ = max K⊥.
    pub delta: f64,
    pub threshold: f64,
    /// threshold − δ.
    pub margin: f64,
    /// None when no branch holds (nothing is claimed then).
    pub conclusion_holds: Option<bool>,
}

/// The implication "any of three hypotheses forces K⊥ ≤ T(S, λ₁)":
///
/// 1. min K⊥ ≥ S²/(24(S + 3λ₁));
/// 2. min K⊥ ≥ [S/(2(2S + 9λ₁))]·max K⊥;
/// 3. Rc ≥ k and max K⊥ ≤ (5/6)k (needs k; enforces λ₁ ≥ 4k/3, since on a
///    genuine manifold Lichnerowicz provides it and the implication is
///    false for arbitrary (tensor, λ₁) pairs without it).
pub fn lemma27_implication(
    r: &CurvatureOperator,
    ctx: &SpectralContext,
) -> Result<Lemma27Report, PinchingError> {
    let s = r.scalar();
    if s <= 0.0 {
        return Err(PinchingError::NonPositiveScalar { s });
    }
    if ctx.lambda1 <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "lambda1",
            value: ctx.lambda1,
        });
    }
    if let Some(k) = ctx.k {
        if k <= 0.0 {
            return Err(PinchingError::NonPositiveInput {
                name: "k",
                value: k,
            });
        }
        let required = lichnerowicz_lower(k)?;
        if ctx.lambda1 < required - PASS_TOL {
            return Err(PinchingError::InconsistentContext {
                lambda1: ctx.lambda1,
                required,
            });
        }
    }
    let kp = kperp_extremes_closed_form(r);
    let (kmin, delta) = (kp.min.value, kp.max.value);
    let lambda1 = ctx.lambda1;

    let b1_bound = s * s / (24.0 * (s + 3.0 * lambda1));
    let b1 = BranchCheck {
        id: 1,
        evaluated: true,
        holds: kmin >= b1_bound - PASS_TOL,
        measured: kmin,
        bound: b1_bound,
    };
    let b2_bound = s / (2.0 * (2.0 * s + 9.0 * lambda1)) * delta;
    let b2 = BranchCheck {
        id: 2,
        evaluated: true,
        holds: kmin >= b2_bound - PASS_TOL,
        measured: kmin,
        bound: b2_bound,
    };
    let b3 = match ctx.k {
        Some(k) => {
            let ricci_ok = r.ricci_contract().min_eigenvalue() >= k - PASS_TOL;
            let bound = 5.0 * k / 6.0;
            BranchCheck {
                id: 3,
                evaluated: true,
                holds: ricci_ok && delta <= bound + PASS_TOL,
                measured: delta,
                bound,
            }
        }
        None => BranchCheck {
            id: 3,
            evaluated: false,
            holds: false,
            measured: delta,
            bound: f64::NAN,
        },
    };
    let applicable = b1.holds || b2.holds || b3.holds;
    let t = threshold(s, lambda1)?;
    Ok(Lemma27Report {
        branches: [b1, b2, b3],
        applicable,
        delta,
        threshold: t,
        margin: t - delta,
        conclusion_holds: applicable.then_some(delta <= t + PASS_TOL),
    })
}

/// Which vanishing argument the certificate is run for; affects only the
/// reported constants (the pointwise discriminant chain is shared).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateFlavor {
    /// Harmonic 2-form argument: interpolation exponent α = 1/2, refined
    /// Kato constant 3/2.
    TwoForm,
    /// Harmonic-Weyl argument: α = 1/3, refined Kato constant 5/3.
    Weyl,
}

impl CertificateFlavor {
    pub fn alpha(self) -> f64 {
        match self {
            CertificateFlavor::TwoForm => 0.5,
            CertificateFlavor::Weyl => 1.0 / 3.0,
        }
    }

    pub fn kato(self) -> f64 {
        match self {
            CertificateFlavor::TwoForm => 1.5,
            CertificateFlavor::Weyl => 5.0 / 3.0,
        }
    }
}

/// Three-valued certificate verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateOutcome {
    Pass,
    Fail,
    /// The hypothesis max K⊥ ≤ T(S, λ₁) does not hold; nothing is claimed.
    NotApplicable,
}

/// Report of [`discriminant_certificate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertificateReport {
    pub flavor: CertificateFlavor,
    /// Interpolation exponent metadata for the flavor.
    pub alpha: f64,
    /// Refined Kato constant metadata for the flavor.
    pub kato: f64,
    pub outcome: CertificateOutcome,
    pub delta: f64,
    pub threshold: f64,
    /// Leading coefficient L₋ = S/3 − 2λ₃⁻ + λ₁ of the comparison
    /// quadratic q(t) = L₋t² − 2λ₁t + L₊.
    pub leading: f64,
    /// Constant coefficient L₊ = S/3 − 2λ₃⁺ + λ₁.
    pub constant_term: f64,
    /// Positive lower bound 3λ₁²/(S + 3λ₁) for both coefficients under the
    /// hypothesis.
    pub coefficient_lower: f64,
    /// λ₁² − L₋L₊: q has no positive root when this is ≤ 0 and L₋ > 0.
    pub discriminant: f64,
    /// |λ₃⁺−λ₃⁻|² − (S/3−λ₃⁺−λ₃⁻)² − λ₁(2S/3−2λ₃⁺−2λ₃⁻); equals the
    /// discriminant identically.
    pub chain_bound: f64,
    /// 4(δ−S/12)² − ¼(S−4δ)² − λ₁(S−4δ); dominates the chain bound and is
    /// ≤ 0 exactly when δ ≤ T(S, λ₁) (it is linear increasing in δ with
    /// root at the threshold).
    pub final_bound: f64,
}

/// Certify that the comparison quadratic of the vanishing argument is
/// nonnegative for t ≥ 0: leading coefficient positive and discriminant
/// chain ≤ 0, all under the hypothesis max K⊥ ≤ T(S, λ₁).
pub fn discriminant_certificate(
    r: &CurvatureOperator,
    ctx: &SpectralContext,
    flavor: CertificateFlavor,
) -> Result<CertificateReport, PinchingError> {
    let s = r.scalar();
    if s <= 0.0 {
        return Err(PinchingError::NonPositiveScalar { s });
    }
    let lambda1 = ctx.lambda1;
    if lambda1 <= 0.0 {
        return Err(PinchingError::NonPositiveInput {
            name: "lambda1",
            value: lambda1,
        });
    }
    let w = r.weyl_blocks();
    let (l3p, l3m) = (w.spectrum_plus[2], w.spectrum_minus[2]);
    let delta = kperp_extremes_closed_form(r).max.value;
    let t = threshold(s, lambda1)?;
    let leading = s / 3.0 - 2.0 * l3m + lambda1;
    let constant_term = s / 3.0 - 2.0 * l3p + lambda1;
    let coefficient_lower = 3.0 * lambda1 * lambda1 / (s + 3.0 * lambda1);
    let discriminant = lambda1 * lambda1 - leading * constant_term;
    let chain_bound = (l3p - l3m).powi(2)
        - (s / 3.0 - l3p - l3m).powi(2)
        - lambda1 * (2.0 * s / 3.0 - 2.0 * l3p - 2.0 * l3m);
    let final_bound = 4.0 * (delta - s / 12.0).powi(2)
        - 0.25 * (s - 4.0 * delta).powi(2)
        - lambda1 * (s - 4.0 * delta);
    let outcome = if delta > t + PASS_TOL {
        CertificateOutcome::NotApplicable
    } else if leading > 0.0 && constant_term > 0.0 && chain_bound <= 1e-10 && final_bound <= 1e-10 {
        CertificateOutcome::Pass
    } else {
        CertificateOutcome::Fail
    };
    Ok(CertificateReport {
        flavor,
        alpha: flavor.alpha(),
        kato: flavor.kato(),
        outcome,
        delta,
        threshold: t,
        leading,
        constant_term,
        coefficient_lower,
        discriminant,
        chain_bound,
        final_bound,
    })
}

pub(crate) fn random_traceless3<R: Rng>(rng: &mut R) -> Matrix3<f64> {
    let mut m = Matrix3::zeros();
    for i in 0..3 {
        for j in i..3 {
            let x = rng.gen_range(-1.0..1.0);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m - Matrix3::identity() * (m.trace() / 3.0)
}

pub(crate) fn random_traceless4<R: Rng>(rng: &mut R) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    for i in 0..4 {
        for j in i..4 {
            let x = rng.gen_range(-1.0..1.0);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m - Matrix4::identity() * (m.trace() / 4.0)
}

/// Assemble an operator from scalar curvature, traceless Ricci, and Weyl
/// blocks; each part satisfies the Bianchi identity, so the sum does.
fn assemble(
    s: f64,
    ric0: &Matrix4<f64>,
    wplus: &Matrix3<f64>,
    wminus: &Matrix3<f64>,
) -> CurvatureOperator {
    let mut blocks = Matrix6::zeros();
    blocks.fixed_view_mut::<3, 3>(0, 0).copy_from(wplus);
    blocks.fixed_view_mut::<3, 3>(3, 3).copy_from(wminus);
    let m = Matrix6::identity() * (s / 12.0)
        + kulkarni_nomizu(ric0, &Matrix4::identity()) * 0.5
        + from_pm_basis(&blocks);
    CurvatureOperator::new(m)
}

fn top_pair_sum(wplus: &Matrix3<f64>, wminus: &Matrix3<f64>) -> f64 {
    sorted_symmetric_eigen3(wplus).0[2] + sorted_symmetric_eigen3(wminus).0[2]
}

/// A seeded random (tensor, context) instance satisfying the certificate
/// hypothesis max K⊥ ≤ T(S, λ₁), built constructively with margin rather
/// than by rejection: the Weyl blocks are rescaled into the headroom
/// 2(T − S/12) > 0 that always exists below the threshold.
pub fn certificate_instance(seed: u64) -> (CurvatureOperator, SpectralContext) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = rng.gen_range(2.0..10.0);
    let lambda1 = rng.gen_range(0.2..5.0);
    let t = threshold(s, lambda1).expect("positive inputs");
    let headroom = 2.0 * (t - s / 12.0);
    let wp = random_traceless3(&mut rng);
    let wm = random_traceless3(&mut rng);
    let l3sum = top_pair_sum(&wp, &wm);
    let scale = if l3sum > 1e-9 {
        rng.gen_range(0.0..0.95) * headroom / l3sum
    } else {
        0.0
    };
    let ric0 = random_traceless4(&mut rng);
    let r = assemble(s, &ric0, &(wp * scale), &(wm * scale));
    (r, SpectralContext::new(lambda1).expect("lambda1 > 0"))
}

/// A seeded random (tensor, context) instance satisfying hypothesis branch
/// 1, 2, or 3 of [`lemma27_implication`], constructed with strict margin.
/// Branch 3 instances are near-Einstein with k taken as the actual minimal
/// Ricci eigenvalue and λ₁ drawn at or above the Lichnerowicz bound.
pub fn lemma27_instance(branch: u8, seed: u64) -> (CurvatureOperator, SpectralContext) {
    assert!((1..=3).contains(&branch), "branch must be 1, 2, or 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match branch {
        1 => {
            let s = rng.gen_range(2.0..10.0);
            let lambda1 = rng.gen_range(0.2..5.0);
            let bound = s * s / (24.0 * (s + 3.0 * lambda1));
            // min K⊥ = S/12 + scaled bottom pair; keep it above the bound.
            let headroom = s / 12.0 - bound;
            let wp = random_traceless3(&mut rng);
            let wm = random_traceless3(&mut rng);
            let bottom = sorted_symmetric_eigen3(&wp).0[0] + sorted_symmetric_eigen3(&wm).0[0];
            let scale = if bottom < -1e-9 {
                rng.gen_range(0.0..0.95) * 2.0 * headroom / (-bottom)
            } else {
                0.0
            };
            let ric0 = random_traceless4(&mut rng);
            let r = assemble(s, &ric0, &(wp * scale), &(wm * scale));
            (r, SpectralContext::new(lambda1).expect("lambda1 > 0"))
        }
        2 => {
            let s = rng.gen_range(2.0..10.0);
            let lambda1 = rng.gen_range(0.2..5.0);
            let c4 = s / (2.0 * (2.0 * s + 9.0 * lambda1));
            let wp = random_traceless3(&mut rng);
            let wm = random_traceless3(&mut rng);
            let w1 = (sorted_symmetric_eigen3(&wp).0[0] + sorted_symmetric_eigen3(&wm).0[0]) / 2.0;
            let w3 = top_pair_sum(&wp, &wm) / 2.0;
            // Need S/12 + t·w₁ ≥ c₄(S/12 + t·w₃); solve for the scale t.
            let denom = c4 * w3 - w1;
            let scale = if denom > 1e-9 {
                rng.gen_range(0.0..0.95) * (s / 12.0) * (1.0 - c4) / denom
            } else {
                1.0
            };
            let ric0 = random_traceless4(&mut rng);
            let r = assemble(s, &ric0, &(wp * scale), &(wm * scale));
            (r, SpectralContext::new(lambda1).expect("lambda1 > 0"))
        }
        _ => {
            // Near-Einstein: Rc = c·g + small perturbation, so k ≈ c while
            // max K⊥ ≤ c/3 + 0.4c stays clear of (5/6)k ≥ (5/6)(0.98c).
            let c = rng.gen_range(1.0..5.0);
            let s = 4.0 * c;
            let raw = random_traceless4(&mut rng);
            let ric0 = if raw.norm() > 1e-12 {
                raw * (rng.gen_range(0.0..0.02) * c / raw.norm())
            } else {
                raw
            };
            let wp = random_traceless3(&mut rng);
            let wm = random_traceless3(&mut rng);
            let l3sum = top_pair_sum(&wp, &wm);
            let scale = if l3sum > 1e-9 {
                rng.gen_range(0.0..0.8) * c / l3sum
            } else {
                0.0
            };
            let r = assemble(s, &ric0, &(wp * scale), &(wm * scale));
            let k = r.ricci_contract().min_eigenvalue();
            let lambda1 = lichnerowicz_lower(k).expect("k > 0") * (1.0 + rng.gen_range(0.0..1.0));
            (r, SpectralContext::with_k(lambda1, k).expect("positive k"))
        }
    }
}

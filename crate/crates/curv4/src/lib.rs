//! Algebraic curvature tensors of oriented Riemannian 4-manifolds.
//!
//! The crate works pointwise: a curvature tensor is a symmetric operator on
//! Λ²(ℝ⁴) satisfying the first Bianchi identity, and everything else is exact
//! linear algebra on its 6×6 matrix. Capabilities, each with a runnable
//! example under `examples/`:
//!
//! - [`lambda2`]: 2-form algebra, Hodge star, self-dual splitting, planes,
//!   SO(4) frame rotations from quaternion pairs.
//! - [`curvature`]: curvature operators, validation, the orthogonal
//!   decomposition into scalar / traceless-Ricci / Weyl parts,
//!   Kulkarni–Nomizu products, the Weitzenbock 2-form term, seeded random
//!   tensors.
//! - [`normal_form`]: Berger's diagonal block normal form of the Weyl part.
//! - [`extremes`]: sectional and biorthogonal curvature, closed-form
//!   biorthogonal extremes, a certified multistart optimizer, and a
//!   quasi-uniform sampling oracle.
//! - [`pinching`]: spherical-space-form pinching thresholds, condition
//!   checks, pointwise lemma bounds, and discriminant certificates.
//! - [`einstein`]: sectional-curvature gap bounds for Einstein metrics and
//!   the positive-intersection-form contradiction pipeline.
//! - [`models`]: closed-form model-space catalog with characteristic-number
//!   integrands.
//! - [`json`]: tensor document parsing and deterministic 17-digit output.
//! - [`verify`]: seeded falsification suites over every invariant above.
//!
//! Run any example with `cargo run --release --example <name>`, or use the
//! `curv4` binary for the same functionality as JSON-emitting subcommands.

pub mod cli;
pub mod curvature;
pub mod einstein;
pub mod extremes;
pub mod json;
pub mod lambda2;
mod linalg;
pub mod models;
pub mod normal_form;
pub mod pinching;
pub mod verify;

pub use cli::run as cli_run;
pub use curvature::{
    kulkarni_nomizu, random_curvature, CurvatureDecomposition, CurvatureOperator, RandomStyle,
    RicciTensor, WeylBlocks,
};
pub use einstein::{
    euler_upper_coefficient, kmin_from_kmax, positive_intersection_contradiction, weyl_gap_check,
    ContradictionReport, EinsteinError, WeylGapReport,
};
pub use extremes::{
    biorthogonal, biorthogonal_extremes_optimize, extremes_sample, kperp_extremes_closed_form,
    sectional, sectional_extremes_optimize, ExtremeResult, KperpExtremes, Method, Quantity,
    SampleExtremes, Target,
};
pub use lambda2::{
    form_to_plane, hodge_star, orthogonal_complement, plane_to_form, so4_from_quaternions,
    FrameRotation, Plane, Quaternion, TwoForm,
};
pub use models::{
    gb_integrand, invariants, invariants_of, model, signature_integrand, InvariantReport,
    ModelError, ModelKind, ModelSpace,
};
pub use normal_form::{
    berger_normal_form, berger_pattern, verify_normal_form, BergerNormalForm, NormalFormReport,
};
pub use pinching::{
    certificate_instance, check_conditions, check_selected_conditions, det_bound,
    discriminant_certificate, lemma27_implication, lemma27_instance, lemma_bounds,
    lichnerowicz_lower, threshold, CertificateFlavor, CertificateOutcome, CertificateReport,
    ConditionCheck, DetBoundReport, InequalityCheck, Lemma27Report, LemmaBoundsReport, PinchMode,
    PinchReport, PinchingError, SpectralContext,
};
pub use verify::{default_cases, run_all, run_suite, SuiteReport, VerifyError, SUITES};

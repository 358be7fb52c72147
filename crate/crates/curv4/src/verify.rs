//! Seeded falsification harness.
//!
//! Every library invariant is packaged as a named suite that draws
//! deterministic pseudo-random cases, measures residuals, and records the
//! first counterexample (with enough data to replay it) when an invariant
//! fails. Suites and their default case counts:
//!
//! | suite           | default n | invariant family                         |
//! |-----------------|-----------|------------------------------------------|
//! | hodge           | 2000      | star/splitting algebra, SO(4) action     |
//! | plane           | 2000      | plane ↔ form dictionary, complements     |
//! | decompose       | 10000     | orthogonal decomposition round trip      |
//! | kn              | 2000      | Kulkarni–Nomizu product identities       |
//! | weitzenbock     | 2000      | R₂ = (S/3)Id − 2W and its spectrum       |
//! | scalar_identity | 2000      | S/4 trace identity, K⊥ symmetry          |
//! | normal_form     | 1000      | block pattern and its six properties     |
//! | extremes        | 200       | closed form dominates sample, optimizer  |
//! | threshold       | 10000     | threshold bounds, monotonicity, scaling  |
//! | lemma25         | 10000     | λ₃^± bounds and the equality iff         |
//! | lemma26         | 100000    | determinant bound and proof identity     |
//! | lemma27         | 10000/br  | hypothesis branches force the threshold  |
//! | certificate     | 10000     | discriminant chain, both flavors         |
//! | corollaries     | 30        | product fails all, Fubini–Study margin   |
//! | models          | 10        | catalog (χ, τ), Kähler equality          |
//! | einstein        | 21        | gap bound chain, frozen constants        |
//!
//! Reports are pure data; the CLI renders them. Identical (seed, n) give
//! identical reports, bit for bit.

use crate::curvature::{
    frobenius_inner, kulkarni_nomizu, random_curvature, CurvatureOperator, RandomStyle,
};
use crate::einstein::{kmin_from_kmax, positive_intersection_contradiction, weyl_gap_check};
use crate::extremes::{
    biorthogonal, biorthogonal_extremes_optimize, extremes_sample, kperp_extremes_closed_form,
    plane_from_pm_coords, sectional_extremes_optimize, Quantity, Target,
};
use crate::json::matrix6_value;
use crate::lambda2::{
    from_pm_basis, hodge_star, orthogonal_complement, plane_to_form, to_pm_basis, FrameRotation,
    Plane, TwoForm,
};
use crate::linalg::sorted_eigenvalues6;
use crate::models::{invariants, model, ModelKind};
use crate::normal_form::berger_normal_form;
use crate::normal_form::verify_normal_form;
use crate::pinching::{
    certificate_instance, check_conditions, det_bound, discriminant_certificate,
    lemma27_implication, lemma27_instance, lemma_bounds, random_traceless3, random_traceless4,
    threshold, CertificateFlavor, CertificateOutcome, PinchMode, SpectralContext,
};
use nalgebra::{Matrix4, Matrix6, Vector3, Vector6};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

/// All suite names, in canonical run order.
pub const SUITES: [&str; 16] = [
    "hodge",
    "plane",
    "decompose",
    "kn",
    "weitzenbock",
    "scalar_identity",
    "normal_form",
    "extremes",
    "threshold",
    "lemma25",
    "lemma26",
    "lemma27",
    "certificate",
    "corollaries",
    "models",
    "einstein",
];

#[derive(Debug, Error, PartialEq)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; known suites: hodge, plane, decompose, kn, weitzenbock, scalar_identity, normal_form, extremes, threshold, lemma25, lemma26, lemma27, certificate, corollaries, models, einstein")]
    UnknownSuite(String),
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub falsifications: u64,
    /// Largest residual observed across all cases (violation amounts and
    /// identity defects; 0 means every identity held exactly).
    pub max_residual: f64,
    /// Replay data for the first falsified case, if any.
    pub first_counterexample: Option<Value>,
    /// Suite-specific headline values (informational).
    pub detail: Option<Value>,
}

struct Ctx {
    cases: u64,
    falsifications: u64,
    max_residual: f64,
    first: Option<Value>,
}

impl Ctx {
    fn new() -> Self {
        Self {
            cases: 0,
            falsifications: 0,
            max_residual: 0.0,
            first: None,
        }
    }

    fn case<F: FnOnce() -> Value>(&mut self, residual: f64, ok: bool, detail: F) {
        self.cases += 1;
        let finite = residual.is_finite();
        if finite && residual > self.max_residual {
            self.max_residual = residual;
        }
        if !(ok && finite) {
            self.falsifications += 1;
            if self.first.is_none() {
                let mut v = detail();
                v["residual"] = json!(residual);
                self.first = Some(v);
            }
        }
    }

    fn finish(self, name: &'static str, detail: Option<Value>) -> SuiteReport {
        SuiteReport {
            name,
            cases: self.cases,
            falsifications: self.falsifications,
            max_residual: self.max_residual,
            first_counterexample: self.first,
            detail,
        }
    }
}

/// Default case count of a known suite.
pub fn default_cases(name: &str) -> Option<u64> {
    Some(match name {
        "hodge" | "plane" | "kn" | "weitzenbock" | "scalar_identity" => 2000,
        "decompose" | "threshold" | "lemma25" | "lemma27" | "certificate" => 10_000,
        "normal_form" => 1000,
        "extremes" => 200,
        "lemma26" => 100_000,
        "corollaries" => 30,
        "models" => 10,
        "einstein" => 21,
        _ => return None,
    })
}

/// Run one named suite with `n` cases (default when `None`).
pub fn run_suite(name: &str, seed: u64, n: Option<u64>) -> Result<SuiteReport, VerifyError> {
    let idx = SUITES
        .iter()
        .position(|s| *s == name)
        .ok_or_else(|| VerifyError::UnknownSuite(name.to_string()))?;
    let n = n.unwrap_or_else(|| default_cases(name).expect("known suite has a default"));
    // Per-suite base decorrelates case seeds between suites; within a
    // suite, case i derives its seed by offset so -n prefixes agree.
    let base = seed ^ ((idx as u64 + 1) << 32);
    Ok(match name {
        "hodge" => suite_hodge(base, n),
        "plane" => suite_plane(base, n),
        "decompose" => suite_decompose(base, n),
        "kn" => suite_kn(base, n),
        "weitzenbock" => suite_weitzenbock(base, n),
        "scalar_identity" => suite_scalar_identity(base, n),
        "normal_form" => suite_normal_form(base, n),
        "extremes" => suite_extremes(base, n),
        "threshold" => suite_threshold(base, n),
        "lemma25" => suite_lemma25(base, n),
        "lemma26" => suite_lemma26(base, n),
        "lemma27" => suite_lemma27(base, n),
        "certificate" => suite_certificate(base, n),
        "corollaries" => suite_corollaries(n),
        "models" => suite_models(base, n),
        "einstein" => suite_einstein(n),
        _ => unreachable!("name was found in SUITES"),
    })
}

/// Run every suite in canonical order.
pub fn run_all(seed: u64, n: Option<u64>) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|name| run_suite(name, seed, n).expect("names come from SUITES"))
        .collect()
}

fn pos(x: f64) -> f64 {
    x.max(0.0)
}

fn unit3<R: Rng>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 {
            return v / n;
        }
    }
}

fn random_sym4<R: Rng>(rng: &mut R) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    for i in 0..4 {
        for j in i..4 {
            let x = rng.gen_range(-1.0..1.0);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    m
}

fn projector(p: &Plane) -> Matrix4<f64> {
    let (u, v) = p.basis();
    u * u.transpose() + v * v.transpose()
}

fn style_for(i: u64) -> RandomStyle {
    match i % 3 {
        0 => RandomStyle::General,
        1 => RandomStyle::Einstein,
        _ => RandomStyle::WeylOnly,
    }
}

fn max_abs6(m: &Matrix6<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

fn max_abs4(m: &Matrix4<f64>) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

fn suite_hodge(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    let star = hodge_star();
    let star_sq = max_abs6(&(star * star - Matrix6::identity()));
    for i in 0..n {
        let f = FrameRotation::random(&mut rng);
        let l = f.induced_lambda2();
        let commute = max_abs6(&(l * star - star * l));
        let orthogonal = max_abs6(&(l.transpose() * l - Matrix6::identity()));
        let (p, q) = f.quaternions();
        let mut blocks = Matrix6::zeros();
        blocks.fixed_view_mut::<3, 3>(0, 0).copy_from(&p.rot3());
        blocks.fixed_view_mut::<3, 3>(3, 3).copy_from(&q.rot3());
        let double_cover = max_abs6(&(to_pm_basis(&l) - blocks));

        let mut c = Vector6::zeros();
        for k in 0..6 {
            c[k] = rng.gen_range(-1.0..1.0);
        }
        if c.norm() < 1e-3 {
            c[0] = 1.0;
        }
        let w = TwoForm::new(c);
        let sp = w.split_selfdual();
        let split = (star * sp.plus.c - sp.plus.c).norm()
            + (star * sp.minus.c + sp.minus.c).norm()
            + (sp.plus.c + sp.minus.c - w.c).norm()
            + (sp.plus.c.norm_squared() + sp.minus.c.norm_squared() - w.c.norm_squared()).abs();

        let residual = star_sq
            .max(commute)
            .max(orthogonal)
            .max(double_cover)
            .max(split);
        ctx.case(
            residual,
            residual < 1e-9,
            || json!({ "case": i, "quaternions": [[p.w, p.x, p.y, p.z], [q.w, q.x, q.y, q.z]] }),
        );
    }
    ctx.finish("hodge", None)
}

fn suite_plane(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    let star = hodge_star();
    for i in 0..n {
        let (phi, psi) = (unit3(&mut rng), unit3(&mut rng));
        let p = plane_from_pm_coords(&phi, &psi);
        let w = plane_to_form(&p);
        let unit = (w.c.norm() - 1.0).abs();
        // Plücker relation for decomposable forms: ⟨ω, *ω⟩ = 0.
        let plucker = w.c.dot(&(star * w.c)).abs();
        let round_trip = match crate::lambda2::form_to_plane(&w) {
            Ok(q) => max_abs4(&(projector(&p) - projector(&q))),
            Err(_) => f64::INFINITY,
        };
        let comp = orthogonal_complement(&p);
        let wc = plane_to_form(&comp);
        let star_match = (star * w.c - wc.c).norm().min((star * w.c + wc.c).norm());
        let double_comp = max_abs4(&(projector(&orthogonal_complement(&comp)) - projector(&p)));
        let residual = unit
            .max(plucker)
            .max(round_trip)
            .max(star_match)
            .max(double_comp);
        ctx.case(residual, residual < 1e-8, || {
            json!({ "case": i, "phi": [phi[0], phi[1], phi[2]], "psi": [psi[0], psi[1], psi[2]] })
        });
    }
    ctx.finish("plane", None)
}

fn suite_decompose(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for i in 0..n {
        let r = random_curvature(base.wrapping_add(i), style_for(i));
        let d = r.decompose();
        let orth = frobenius_inner(&d.scalar_part, &d.ricci_part)
            .abs()
            .max(frobenius_inner(&d.scalar_part, &d.weyl_part).abs())
            .max(frobenius_inner(&d.ricci_part, &d.weyl_part).abs());
        let reassembly = max_abs6(&(d.scalar_part + d.ricci_part + d.weyl_part - r.matrix()));
        let weyl_ricci = max_abs4(&CurvatureOperator::new(d.weyl_part).ricci_contract().m);
        let ok = orth < 1e-9 && reassembly < 1e-10 && weyl_ricci < 1e-9;
        ctx.case(orth.max(reassembly).max(weyl_ricci), ok, || {
            json!({ "case": i, "seed": base.wrapping_add(i), "matrix": matrix6_value(r.matrix()) })
        });
    }
    ctx.finish("decompose", None)
}

fn suite_kn(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    let g = Matrix4::identity();
    let gg = max_abs6(&(kulkarni_nomizu(&g, &g) - Matrix6::identity() * 2.0));
    for i in 0..n {
        let a = random_sym4(&mut rng);
        let b = random_sym4(&mut rng);
        let symmetric = max_abs6(&(kulkarni_nomizu(&a, &b) - kulkarni_nomizu(&b, &a)));
        let bilinear = max_abs6(
            &(kulkarni_nomizu(&(a * 2.0 + b), &g)
                - kulkarni_nomizu(&a, &g) * 2.0
                - kulkarni_nomizu(&b, &g)),
        );
        let ka = CurvatureOperator::new(kulkarni_nomizu(&a, &g));
        let valid = match ka.validate(1e-8) {
            Ok(()) => 0.0,
            Err(_) => f64::INFINITY,
        };
        // Ricci contraction of a ∘ g is 2a + tr(a)g.
        let ricci = max_abs4(&(ka.ricci_contract().m - a * 2.0 - g * a.trace()));
        let residual = gg.max(symmetric).max(bilinear).max(valid).max(ricci);
        ctx.case(
            residual,
            residual < 1e-9,
            || json!({ "case": i, "a_diag": [a[(0,0)], a[(1,1)], a[(2,2)], a[(3,3)]] }),
        );
    }
    ctx.finish("kn", None)
}

fn suite_weitzenbock(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for i in 0..n {
        let r = random_curvature(base.wrapping_add(i), style_for(i));
        let r2 = r.weitzenbock_r2();
        let d = r.decompose();
        let formula =
            max_abs6(&(r2.operator - Matrix6::identity() * (d.scalar / 3.0) + d.weyl_part * 2.0));
        let spectrum = (sorted_eigenvalues6(&r2.operator) - r2.spectrum)
            .abs()
            .max();
        let swapped = r.swap_orientation().weitzenbock_r2().spectrum;
        let swap_invariant = (swapped - r2.spectrum).abs().max();
        let residual = formula.max(spectrum).max(swap_invariant);
        ctx.case(residual, residual < 1e-9, || {
            json!({ "case": i, "seed": base.wrapping_add(i), "matrix": matrix6_value(r.matrix()) })
        });
    }
    ctx.finish("weitzenbock", None)
}

fn suite_scalar_identity(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    for i in 0..n {
        let r = random_curvature(base.wrapping_add(i), style_for(i));
        let s = r.scalar();
        // The three coordinate planes through e₁ tile the trace: the K⊥ sum
        // is S/4 regardless of the tensor.
        let sum = biorthogonal(&r, &Plane::span(0, 1))
            + biorthogonal(&r, &Plane::span(0, 2))
            + biorthogonal(&r, &Plane::span(0, 3));
        let trace_identity = (sum - s / 4.0).abs();

        let (phi, psi) = (unit3(&mut rng), unit3(&mut rng));
        let p = plane_from_pm_coords(&phi, &psi);
        let symmetry = (biorthogonal(&r, &p) - biorthogonal(&r, &orthogonal_complement(&p))).abs();
        let w = r.weyl_blocks();
        let weyl_route = s / 12.0 + 0.5 * ((w.plus * phi).dot(&phi) + (w.minus * psi).dot(&psi));
        let formula = (weyl_route - biorthogonal(&r, &p)).abs();
        let residual = trace_identity.max(symmetry).max(formula);
        ctx.case(residual, residual < 1e-9, || {
            json!({ "case": i, "seed": base.wrapping_add(i), "matrix": matrix6_value(r.matrix()) })
        });
    }
    ctx.finish("scalar_identity", None)
}

fn suite_normal_form(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for i in 0..n {
        let r = random_curvature(base.wrapping_add(i), style_for(i));
        let nf = berger_normal_form(&r);
        match verify_normal_form(&r, &nf) {
            Ok(report) => ctx.case(report.block_residual, report.all_hold(), || {
                json!({
                    "case": i,
                    "seed": base.wrapping_add(i),
                    "matrix": matrix6_value(r.matrix()),
                    "a": [nf.a[0], nf.a[1], nf.a[2]],
                    "b": [nf.b[0], nf.b[1], nf.b[2]],
                })
            }),
            Err(e) => ctx.case(
                f64::INFINITY,
                false,
                || json!({ "case": i, "seed": base.wrapping_add(i), "error": e.to_string() }),
            ),
        }
    }
    ctx.finish("normal_form", None)
}

fn suite_extremes(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for i in 0..n {
        let seed = base.wrapping_add(i);
        let r = random_curvature(seed, style_for(i));
        let kp = kperp_extremes_closed_form(&r);
        let sampled = extremes_sample(&r, Quantity::Biorthogonal, 10_000, seed);
        let domination =
            pos(sampled.max.value - kp.max.value).max(pos(kp.min.value - sampled.min.value));
        let attain = (biorthogonal_extremes_optimize(&r, Target::Max, seed).value - kp.max.value)
            .abs()
            .max(
                (biorthogonal_extremes_optimize(&r, Target::Min, seed).value - kp.min.value).abs(),
            );
        let ok = domination <= 1e-10 && attain <= 1e-8;
        ctx.case(
            domination.max(attain),
            ok,
            || json!({ "case": i, "seed": seed, "matrix": matrix6_value(r.matrix()) }),
        );
    }
    ctx.finish("extremes", None)
}

fn suite_threshold(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    for i in 0..n {
        let s = 10.0_f64.powf(rng.gen_range(-3.0..3.0));
        let l = 10.0_f64.powf(rng.gen_range(-3.0..3.0));
        let t = threshold(s, l).expect("positive inputs");
        let below = pos(t - s / 4.0);
        let gap = ((s / 4.0 - t) - s * s / (12.0 * (s + 3.0 * l))).abs() / (1.0 + s);
        let ds = s * rng.gen_range(0.01..1.0);
        let mono =
            pos(t - threshold(s + ds, l).expect("positive"))
                .max(pos(t - threshold(s, l + ds).expect("positive")));
        let c = 10.0_f64.powf(rng.gen_range(-2.0..2.0));
        let covariant = (threshold(c * s, c * l).expect("positive") - c * t).abs() / (c * t);
        let residual = below.max(gap).max(mono).max(covariant);
        ctx.case(
            residual,
            residual < 1e-10,
            || json!({ "case": i, "s": s, "lambda1": l, "scale": c }),
        );
    }
    ctx.finish("threshold", None)
}

fn suite_lemma25(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    for i in 0..n {
        // Every fourth case: one Weyl half exactly zero, exercising the
        // equality branch of the iff.
        let r = if i % 4 == 3 {
            let s = rng.gen_range(0.5..8.0);
            let w = random_traceless3(&mut rng);
            let ric0 = random_traceless4(&mut rng);
            let mut blocks = Matrix6::zeros();
            if i % 8 == 3 {
                blocks.fixed_view_mut::<3, 3>(0, 0).copy_from(&w);
            } else {
                blocks.fixed_view_mut::<3, 3>(3, 3).copy_from(&w);
            }
            CurvatureOperator::new(
                Matrix6::identity() * (s / 12.0)
                    + kulkarni_nomizu(&ric0, &Matrix4::identity()) * 0.5
                    + from_pm_basis(&blocks),
            )
        } else {
            random_curvature(base.wrapping_add(i), style_for(i))
        };
        let rep = lemma_bounds(&r);
        let violation = (rep.sum_identity.lhs - rep.sum_identity.rhs)
            .abs()
            .max(pos(rep.gap_bound.rhs - rep.gap_bound.lhs))
            .max(pos(rep.single_plus.rhs - rep.single_plus.lhs))
            .max(pos(rep.single_minus.rhs - rep.single_minus.lhs));
        let iff_consistent = rep.equality_last_two == rep.weyl_product_zero;
        ctx.case(violation, violation < 1e-9 && iff_consistent, || {
            json!({
                "case": i,
                "matrix": matrix6_value(r.matrix()),
                "equality_last_two": rep.equality_last_two,
                "weyl_product": rep.weyl_product,
            })
        });
    }
    ctx.finish("lemma25", None)
}

fn suite_lemma26(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    for i in 0..n {
        let w = random_traceless3(&mut rng);
        let rep = det_bound(&w).expect("construction is traceless");
        let residual = pos(rep.rhs - rep.lhs).max(rep.identity_residual.abs());
        ctx.case(
            residual,
            rep.holds && rep.identity_residual.abs() < 1e-9,
            || {
                json!({
                    "case": i,
                    "w": [
                        [w[(0, 0)], w[(0, 1)], w[(0, 2)]],
                        [w[(1, 0)], w[(1, 1)], w[(1, 2)]],
                        [w[(2, 0)], w[(2, 1)], w[(2, 2)]],
                    ],
                })
            },
        );
    }
    ctx.finish("lemma26", None)
}

fn suite_lemma27(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for branch in 1..=3u8 {
        for i in 0..n {
            let seed = base.wrapping_add(branch as u64 * n).wrapping_add(i);
            let (r, c) = lemma27_instance(branch, seed);
            let rep = lemma27_implication(&r, &c).expect("instances are in-domain");
            let hypothesis = rep.branches[branch as usize - 1].holds;
            let conclusion = rep.conclusion_holds == Some(true);
            ctx.case(
                pos(rep.delta - rep.threshold),
                hypothesis && conclusion,
                || {
                    json!({
                        "case": i,
                        "branch": branch,
                        "seed": seed,
                        "lambda1": c.lambda1,
                        "k": c.k,
                        "matrix": matrix6_value(r.matrix()),
                    })
                },
            );
        }
    }
    ctx.finish("lemma27", None)
}

fn suite_certificate(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    for i in 0..n {
        let seed = base.wrapping_add(i);
        let (r, c) = certificate_instance(seed);
        for flavor in [CertificateFlavor::TwoForm, CertificateFlavor::Weyl] {
            let rep = discriminant_certificate(&r, &c, flavor).expect("instances are in-domain");
            let residual = pos(rep.chain_bound)
                .max(pos(rep.final_bound))
                .max(pos(rep.coefficient_lower - rep.leading));
            ctx.case(residual, rep.outcome == CertificateOutcome::Pass, || {
                json!({
                    "case": i,
                    "seed": seed,
                    "flavor": format!("{flavor:?}"),
                    "lambda1": c.lambda1,
                    "matrix": matrix6_value(r.matrix()),
                })
            });
        }
    }
    ctx.finish("certificate", None)
}

fn suite_corollaries(n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut product = Matrix6::zeros();
    product[(0, 0)] = 1.0;
    product[(5, 5)] = 1.0;
    let product = CurvatureOperator::new(product);
    let steps = n.max(2);
    for i in 0..steps {
        // Geometric grid over [0.1, 1000].
        let lambda1 = 0.1 * 10.0_f64.powf(4.0 * i as f64 / (steps - 1) as f64);
        let c = SpectralContext::with_k(lambda1, 1.0).expect("positive");
        let rep = check_conditions(&product, &c, PinchMode::Biorthogonal)
            .expect("product scalar curvature is 4");
        // Residual: how close any condition came to passing (positive
        // means an actual pass, which falsifies the corollary).
        let closest = rep
            .conditions
            .iter()
            .map(|cond| {
                if cond.upper {
                    cond.threshold - cond.measured
                } else {
                    cond.measured - cond.threshold
                }
            })
            .fold(f64::NEG_INFINITY, f64::max);
        ctx.case(
            pos(closest),
            !rep.any_pass,
            || json!({ "case": i, "lambda1": lambda1, "report_kmax": rep.kmax }),
        );
    }
    // Fubini–Study at Rc = g passes condition (2) with margin exactly 1/6.
    let mut t = Matrix6::zeros();
    t[(2, 2)] = 1.0;
    t[(3, 3)] = 1.0 / 3.0;
    t[(4, 4)] = 1.0 / 3.0;
    t[(5, 5)] = 1.0 / 3.0;
    let cp2 = CurvatureOperator::new(from_pm_basis(&t));
    let c = SpectralContext::with_k(2.0, 1.0).expect("positive");
    let rep = check_conditions(&cp2, &c, PinchMode::Biorthogonal).expect("scalar is 4");
    let c2 = rep
        .conditions
        .iter()
        .find(|c| c.id == 2)
        .expect("condition 2 evaluated");
    let margin_error = ((c2.threshold - c2.measured) - 1.0 / 6.0).abs();
    ctx.case(
        margin_error,
        c2.pass && margin_error < 1e-12,
        || json!({ "case": "fubini-study", "margin": c2.threshold - c2.measured }),
    );
    ctx.finish("corollaries", None)
}

fn suite_models(base: u64, n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    let catalog: [(ModelKind, &[f64]); 4] = [
        (ModelKind::Sphere, &[1.0]),
        (ModelKind::RealProjective, &[1.0]),
        (ModelKind::ComplexProjective, &[24.0]),
        (ModelKind::ProductSpheres, &[1.0, 1.0]),
    ];
    for (kind, params) in catalog {
        let m = model(kind, params).expect("catalog parameters are valid");
        for i in 0..n {
            let scale = if i == 0 {
                1.0
            } else {
                10.0_f64.powf(rng.gen_range(-1.5..1.5))
            };
            let scaled = m.scaled(scale).expect("positive scale");
            let inv = invariants(&scaled);
            let chi_err = (inv.chi - m.known_chi as f64).abs() / m.known_chi as f64;
            let tau_err = (inv.tau - m.known_tau as f64).abs();
            let s = scaled.curvature.scalar();
            let kahler = match kind {
                ModelKind::ComplexProjective | ModelKind::ProductSpheres => {
                    (inv.weyl_plus_norm_sq - s * s / 24.0).abs() / (s * s / 24.0)
                }
                _ => 0.0,
            };
            let residual = chi_err.max(tau_err).max(kahler);
            ctx.case(residual, residual < 1e-8 && inv.isotropic_nonneg, || {
                json!({ "kind": kind.to_string(), "scale": scale, "chi": inv.chi, "tau": inv.tau })
            });
        }
    }
    // Boundary case: the equal-radius product sits exactly on the edge of
    // nonnegative isotropic curvature.
    let m = model(ModelKind::ProductSpheres, &[1.0, 1.0]).expect("valid");
    let edge = invariants(&m).r2_min_eigenvalue.abs();
    ctx.case(
        edge,
        edge < 1e-12,
        || json!({ "case": "product-r2-boundary" }),
    );
    ctx.finish("models", None)
}

fn suite_einstein(n: u64) -> SuiteReport {
    let mut ctx = Ctx::new();
    let steps = n.max(2);
    for i in 0..steps {
        let alpha = 1.0 / 3.0 + (2.0 / 3.0) * i as f64 / (steps - 1) as f64;
        let rep = positive_intersection_contradiction(alpha).expect("alpha in [1/3, 1]");
        ctx.case(
            pos(rep.euler_coefficient - 4.0),
            rep.contradiction && rep.endpoint < 1.0,
            || json!({ "alpha": alpha, "euler_coefficient": rep.euler_coefficient }),
        );
    }
    let top = positive_intersection_contradiction(1.0).expect("alpha = 1");
    let beta_err = (top.beta - (7.0 - 105.0_f64.sqrt()) / 28.0).abs();
    let coeff_err = (top.euler_coefficient - 3.440911795339105).abs();
    ctx.case(
        beta_err.max(coeff_err),
        beta_err < 1e-12 && coeff_err < 1e-12,
        || json!({ "case": "frozen-constants", "beta": top.beta, "c": top.euler_coefficient }),
    );
    // Sharpness: kmin ≥ β(kmax) on the Rc = g models, equality on two.
    let sphere = CurvatureOperator::new(Matrix6::identity() / 3.0);
    let mut t = Matrix6::zeros();
    t[(2, 2)] = 1.0;
    t[(3, 3)] = 1.0 / 3.0;
    t[(4, 4)] = 1.0 / 3.0;
    t[(5, 5)] = 1.0 / 3.0;
    let cp2 = CurvatureOperator::new(from_pm_basis(&t));
    let mut pm = Matrix6::zeros();
    pm[(0, 0)] = 1.0;
    pm[(5, 5)] = 1.0;
    let product = CurvatureOperator::new(pm);
    for (name, r, sharp) in [
        ("sphere", sphere, true),
        ("cp2", cp2, true),
        ("product", product, false),
    ] {
        let kmax = sectional_extremes_optimize(&r, Target::Max, 0).value;
        let kmin = sectional_extremes_optimize(&r, Target::Min, 0).value;
        let beta = kmin_from_kmax(kmax).expect("kmax at most 1 for these models");
        let slack = kmin - beta;
        let ok = slack >= -1e-8 && (!sharp || slack.abs() < 1e-7);
        ctx.case(
            if sharp { slack.abs() } else { pos(-slack) },
            ok,
            || json!({ "case": name, "kmin": kmin, "kmax": kmax, "beta": beta }),
        );
        if name == "product" || name == "cp2" {
            let gap = weyl_gap_check(&r).expect("Einstein with positive scalar");
            let eq = gap.margin.abs();
            ctx.case(
                eq,
                gap.holds == Some(true) && eq < 1e-10,
                || json!({ "case": format!("{name}-weyl-gap"), "margin": gap.margin }),
            );
        }
    }
    let detail = json!({
        "alpha": 1.0,
        "beta": top.beta,
        "euler_coefficient": top.euler_coefficient,
        "endpoint": top.endpoint,
        "contradiction": top.contradiction,
    });
    ctx.finish("einstein", Some(detail))
}

//! Sectional and biorthogonal curvature, and three independent routes to
//! their extremes.
//!
//! Every unit decomposable 2-form splits as ω = (φ + ψ)/√2 with φ self-dual,
//! ψ anti-self-dual, both unit; so oriented planes are parametrized by
//! S² × S². Writing the curvature operator in (𝔹⁺, 𝔹⁻) blocks
//! [[A, B], [Bᵀ, C]], the sectional curvature of the plane of (φ, ψ) is
//!
//! ```text
//! K(φ,ψ) = ½⟨Aφ,φ⟩ + ⟨Bψ,φ⟩ + ½⟨Cψ,ψ⟩,
//! ```
//!
//! and the biorthogonal curvature K⊥(P) = (K(P) + K(P⊥))/2 drops the mixed
//! term:
//!
//! ```text
//! K⊥(φ,ψ) = S/12 + ½(⟨W⁺φ,φ⟩ + ⟨W⁻ψ,ψ⟩).
//! ```
//!
//! The φ and ψ contributions to K⊥ decouple, which gives closed-form
//! extremes from the Weyl spectra:
//!
//! ```text
//! min K⊥ = S/12 + (λ₁⁺ + λ₁⁻)/2,    max K⊥ = S/12 + (λ₃⁺ + λ₃⁻)/2.
//! ```
//!
//! Sectional extremes have no closed form in general; they are computed by
//! alternating exact maximizations over each sphere factor (each subproblem
//! is a sphere-constrained quadratic solved by eigendecomposition plus a
//! bisected secular equation), with multistart. A quasi-uniform sampling
//! oracle provides an implementation-independent lower bound on the max
//! (upper bound on the min) for cross-checking; it never uses an
//! eigendecomposition.

use crate::curvature::CurvatureOperator;
use crate::lambda2::{
    form_to_plane, orthogonal_complement, plane_to_form, pm_basis, to_pm_basis, Plane,
};
use crate::linalg::{canonical_sign3, sorted_symmetric_eigen3};
use nalgebra::{Matrix3, Vector3, Vector6};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Convergence threshold on the iterate step of the alternating optimizer.
pub const OPT_STEP_TOL: f64 = 1e-12;
/// Iteration cap per restart of the alternating optimizer.
pub const OPT_MAX_ITERS: usize = 200;
/// Width threshold for the bisected secular equation.
pub const SECULAR_TOL: f64 = 1e-14;
/// Seeded random restarts added to the 9 deterministic eigenvector starts.
pub const N_RANDOM_STARTS: usize = 24;

/// Which curvature function of a plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Sectional,
    Biorthogonal,
}

/// Which extreme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Min,
    Max,
}

/// How an extreme value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Optimize,
    Sample,
}

/// An extreme value together with a plane that attains it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeResult {
    pub value: f64,
    pub witness: Plane,
    pub method: Method,
    pub evaluations: u64,
    /// False when the optimizer hit the iteration cap; the value is still
    /// the best found, never silently dropped.
    pub converged: bool,
}

/// Closed-form biorthogonal extremes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KperpExtremes {
    pub min: ExtremeResult,
    pub max: ExtremeResult,
}

/// Best sampled values of a quantity over quasi-uniform planes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleExtremes {
    pub min: ExtremeResult,
    pub max: ExtremeResult,
}

/// (𝔹⁺, 𝔹⁻) blocks of an operator, cached for repeated evaluation.
#[derive(Debug, Clone, Copy)]
struct PmBlocks {
    a: Matrix3<f64>,
    b: Matrix3<f64>,
    c: Matrix3<f64>,
}

impl PmBlocks {
    fn of(r: &CurvatureOperator) -> Self {
        let t = to_pm_basis(r.matrix());
        Self {
            a: t.fixed_view::<3, 3>(0, 0).into_owned(),
            b: t.fixed_view::<3, 3>(0, 3).into_owned(),
            c: t.fixed_view::<3, 3>(3, 3).into_owned(),
        }
    }

    fn sectional(&self, phi: &Vector3<f64>, psi: &Vector3<f64>) -> f64 {
        0.5 * phi.dot(&(self.a * phi)) + phi.dot(&(self.b * psi)) + 0.5 * psi.dot(&(self.c * psi))
    }
}

/// Sectional curvature ⟨ℛω_P, ω_P⟩ of an oriented plane.
pub fn sectional(r: &CurvatureOperator, p: &Plane) -> f64 {
    let w = plane_to_form(p).c;
    w.dot(&(r.matrix() * w))
}

/// Biorthogonal curvature (K(P) + K(P⊥))/2, computed from the two planes
/// directly (not via the Weyl-block formula, which is a tested invariant).
pub fn biorthogonal(r: &CurvatureOperator, p: &Plane) -> f64 {
    0.5 * (sectional(r, p) + sectional(r, &orthogonal_complement(p)))
}

/// The plane whose self-dual part has 𝔹⁺ coordinates φ and anti-self-dual
/// part 𝔹⁻ coordinates ψ (both unit).
pub fn plane_from_pm_coords(phi: &Vector3<f64>, psi: &Vector3<f64>) -> Plane {
    let coords = Vector6::new(phi[0], phi[1], phi[2], psi[0], psi[1], psi[2]);
    let lex = pm_basis() * coords / 2.0_f64.sqrt();
    form_to_plane(&crate::lambda2::TwoForm::new(lex))
        .expect("unit (φ,ψ) pair yields a unit decomposable form")
}

/// Closed-form biorthogonal extremes from the Weyl spectra, with witness
/// planes built from the extreme eigenvector pairs.
pub fn kperp_extremes_closed_form(r: &CurvatureOperator) -> KperpExtremes {
    let s = r.scalar();
    let blocks = r.weyl_blocks();
    let min_value = s / 12.0 + 0.5 * (blocks.spectrum_plus[0] + blocks.spectrum_minus[0]);
    let max_value = s / 12.0 + 0.5 * (blocks.spectrum_plus[2] + blocks.spectrum_minus[2]);
    let min_witness = plane_from_pm_coords(
        &blocks.basis_plus.column(0).into_owned(),
        &blocks.basis_minus.column(0).into_owned(),
    );
    let max_witness = plane_from_pm_coords(
        &blocks.basis_plus.column(2).into_owned(),
        &blocks.basis_minus.column(2).into_owned(),
    );
    KperpExtremes {
        min: ExtremeResult {
            value: min_value,
            witness: min_witness,
            method: Method::ClosedForm,
            evaluations: 0,
            converged: true,
        },
        max: ExtremeResult {
            value: max_value,
            witness: max_witness,
            method: Method::ClosedForm,
            evaluations: 0,
            converged: true,
        },
    }
}

/// Global maximum of ½⟨Qx,x⟩ + ⟨c,x⟩ over the unit sphere.
///
/// Stationary points satisfy (μI − Q)x = c with ‖x‖ = 1; the maximizer is
/// the root with μ ≥ λ_max(Q). The secular function ‖(μI − Q)⁻¹c‖² − 1 is
/// strictly decreasing on (λ_max, ∞), so bisection is safe. When c is
/// orthogonal to the top eigenspace (hard case) the sphere is reached by
/// adding a top-eigenvector component.
fn sphere_quadratic_max(q: &Matrix3<f64>, c: &Vector3<f64>) -> Vector3<f64> {
    let (d, v) = sorted_symmetric_eigen3(q);
    let scale = d[2].abs().max(d[0].abs()).max(1.0);
    let ct = v.transpose() * c;
    if c.norm() <= 1e-15 * scale {
        return canonical_sign3(&v.column(2).into_owned());
    }
    let dmax = d[2];
    // Components within the (numerical) top eigenspace.
    let in_top = [
        dmax - d[0] <= 1e-10 * scale,
        dmax - d[1] <= 1e-10 * scale,
        true,
    ];
    let top_mass: f64 = (0..3)
        .filter(|&i| in_top[i])
        .map(|i| ct[i] * ct[i])
        .sum::<f64>()
        .sqrt();
    if top_mass <= 1e-13 * c.norm() {
        // Hard case: saturate the sphere along the top eigenvector.
        let mut xhat = Vector3::zeros();
        for i in 0..3 {
            if !in_top[i] {
                xhat += v.column(i) * (ct[i] / (dmax - d[i]));
            }
        }
        let n2 = xhat.norm_squared();
        if n2 <= 1.0 {
            // Any top-eigenvector completion maximizes; canonicalize its sign
            // so the tie-break is deterministic.
            let top = canonical_sign3(&v.column(2).into_owned());
            let x = xhat + top * (1.0 - n2).sqrt();
            return x.normalize();
        }
        // ‖x(λ_max)‖ > 1: the root lies strictly above λ_max after all.
    }
    let norm2_at = |mu: f64| -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            let gap = mu - d[i];
            if gap > 0.0 {
                let term = ct[i] / gap;
                s += term * term;
            } else if ct[i].abs() > 0.0 {
                return f64::INFINITY;
            }
        }
        s
    };
    let mut lo = dmax;
    let mut hi = dmax + c.norm() + 1e-30;
    // ‖x(hi)‖ ≤ ‖c‖/(hi − dmax) ≤ 1, so the root is in (lo, hi].
    for _ in 0..200 {
        if hi - lo <= SECULAR_TOL * scale.max(1.0) {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if norm2_at(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mu = hi;
    let mut x = Vector3::zeros();
    for i in 0..3 {
        let gap = mu - d[i];
        if gap > 0.0 {
            x += v.column(i) * (ct[i] / gap);
        }
    }
    x.normalize()
}

struct Alternating {
    a: Matrix3<f64>,
    b: Matrix3<f64>,
    c: Matrix3<f64>,
}

impl Alternating {
    fn value(&self, phi: &Vector3<f64>, psi: &Vector3<f64>) -> f64 {
        0.5 * phi.dot(&(self.a * phi)) + phi.dot(&(self.b * psi)) + 0.5 * psi.dot(&(self.c * psi))
    }

    /// Alternating exact sphere maximizations from one start.
    fn run(
        &self,
        mut phi: Vector3<f64>,
        mut psi: Vector3<f64>,
    ) -> (f64, Vector3<f64>, Vector3<f64>, u64, bool) {
        let mut evaluations = 0u64;
        for _ in 0..OPT_MAX_ITERS {
            let phi_next = sphere_quadratic_max(&self.a, &(self.b * psi));
            let psi_next = sphere_quadratic_max(&self.c, &(self.b.transpose() * phi_next));
            evaluations += 2;
            let step = (phi_next - phi).norm().max((psi_next - psi).norm());
            phi = phi_next;
            psi = psi_next;
            if step < OPT_STEP_TOL {
                return (self.value(&phi, &psi), phi, psi, evaluations, true);
            }
        }
        (self.value(&phi, &psi), phi, psi, evaluations, false)
    }
}

fn random_unit3<R: Rng>(rng: &mut R) -> Vector3<f64> {
    loop {
        let v = Vector3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 0.1 && n <= 1.0 {
            return v / n;
        }
    }
}

fn optimize_blocks(
    a: Matrix3<f64>,
    b: Matrix3<f64>,
    c: Matrix3<f64>,
    target: Target,
    seed: u64,
) -> (f64, Vector3<f64>, Vector3<f64>, u64, bool) {
    // Minimizing f is maximizing −f.
    let sign = match target {
        Target::Max => 1.0,
        Target::Min => -1.0,
    };
    let alt = Alternating {
        a: a * sign,
        b: b * sign,
        c: c * sign,
    };
    let (_, va) = sorted_symmetric_eigen3(&alt.a);
    let (_, vc) = sorted_symmetric_eigen3(&alt.c);

    let mut starts: Vec<(Vector3<f64>, Vector3<f64>)> = Vec::with_capacity(9 + N_RANDOM_STARTS);
    for i in 0..3 {
        for j in 0..3 {
            starts.push((va.column(i).into_owned(), vc.column(j).into_owned()));
        }
    }
    // Restart streams are pre-split from the seed, so the result does not
    // depend on evaluation order.
    for r in 0..N_RANDOM_STARTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(1 + r as u64);
        let phi = random_unit3(&mut rng);
        let psi = random_unit3(&mut rng);
        starts.push((phi, psi));
    }

    let mut best: Option<(f64, Vector3<f64>, Vector3<f64>, bool)> = None;
    let mut total_evals = 0u64;
    for (phi0, psi0) in starts {
        let (val, phi, psi, evals, converged) = alt.run(phi0, psi0);
        total_evals += evals;
        if best.as_ref().is_none_or(|b| val > b.0) {
            best = Some((val, phi, psi, converged));
        }
    }
    let (val, phi, psi, converged) = best.expect("at least one start");
    (sign * val, phi, psi, total_evals, converged)
}

/// Sectional extreme by multistart alternating maximization. Exact sphere
/// subproblems make every iterate monotone, so the result is always a true
/// lower bound of the max (upper bound of the min); `converged = false`
/// flags an iteration-capped restart rather than discarding it.
pub fn sectional_extremes_optimize(
    r: &CurvatureOperator,
    target: Target,
    seed: u64,
) -> ExtremeResult {
    let blocks = PmBlocks::of(r);
    let (value, phi, psi, evaluations, converged) =
        optimize_blocks(blocks.a, blocks.b, blocks.c, target, seed);
    ExtremeResult {
        value,
        witness: plane_from_pm_coords(&phi, &psi),
        method: Method::Optimize,
        evaluations,
        converged,
    }
}

/// Biorthogonal extreme through the same optimizer machinery (the mixed
/// block is zero for K⊥, so each restart converges in one sweep). Used to
/// cross-check the closed form through an independent code path.
pub fn biorthogonal_extremes_optimize(
    r: &CurvatureOperator,
    target: Target,
    seed: u64,
) -> ExtremeResult {
    let s = r.scalar();
    let w = r.weyl_blocks();
    let (value, phi, psi, evaluations, converged) =
        optimize_blocks(w.plus, Matrix3::zeros(), w.minus, target, seed);
    ExtremeResult {
        value: s / 12.0 + value,
        witness: plane_from_pm_coords(&phi, &psi),
        method: Method::Optimize,
        evaluations,
        converged,
    }
}

/// Radical-inverse (van der Corput) sequence in the given base.
fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    let b = base as f64;
    while i > 0 {
        f /= b;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Area-preserving map from the unit square to S².
fn square_to_sphere(u: f64, v: f64) -> Vector3<f64> {
    let z = 2.0 * u - 1.0;
    let theta = 2.0 * std::f64::consts::PI * v;
    let rho = (1.0 - z * z).max(0.0).sqrt();
    Vector3::new(rho * theta.cos(), rho * theta.sin(), z)
}

/// Quasi-uniform S²×S² sample: Halton bases (2,3) for the first factor and
/// (5,7) for the second, with a seeded Cranley–Patterson shift so distinct
/// seeds give distinct, equally well-distributed point sets.
fn sample_pair(i: u64, shift: &[f64; 4]) -> (Vector3<f64>, Vector3<f64>) {
    let u = [
        (radical_inverse(i, 2) + shift[0]).fract(),
        (radical_inverse(i, 3) + shift[1]).fract(),
        (radical_inverse(i, 5) + shift[2]).fract(),
        (radical_inverse(i, 7) + shift[3]).fract(),
    ];
    (square_to_sphere(u[0], u[1]), square_to_sphere(u[2], u[3]))
}

/// Evaluate `quantity` on `n` quasi-uniform planes and return the best min
/// and max with witnesses.
///
/// The sampled value is always an upper bound of the true min and a lower
/// bound of the true max. When the quantity splits over the two sphere
/// factors — always for K⊥, and for K exactly when the mixed block vanishes
/// (Einstein or Weyl-only tensors) — the per-factor extremes over the same
/// point set are combined as well, which sharpens the oracle to per-factor
/// sampling resolution at no extra evaluations.
pub fn extremes_sample(
    r: &CurvatureOperator,
    quantity: Quantity,
    n: u64,
    seed: u64,
) -> SampleExtremes {
    assert!(n > 0, "sample count must be positive");
    let blocks = PmBlocks::of(r);
    let s = r.scalar();
    let w = r.weyl_blocks();
    let scale = r.matrix().abs().max().max(1.0);
    let separable = match quantity {
        Quantity::Biorthogonal => true,
        Quantity::Sectional => blocks.b.abs().max() <= 1e-12 * scale,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shift = [
        rng.gen::<f64>(),
        rng.gen::<f64>(),
        rng.gen::<f64>(),
        rng.gen::<f64>(),
    ];

    let eval = |phi: &Vector3<f64>, psi: &Vector3<f64>| -> f64 {
        match quantity {
            Quantity::Sectional => blocks.sectional(phi, psi),
            Quantity::Biorthogonal => {
                s / 12.0 + 0.5 * (phi.dot(&(w.plus * phi)) + psi.dot(&(w.minus * psi)))
            }
        }
    };
    // Per-factor terms of a separable quantity (t1(φ) + t2(ψ) + const).
    let term1 = |phi: &Vector3<f64>| -> f64 {
        match quantity {
            Quantity::Sectional => 0.5 * phi.dot(&(blocks.a * phi)),
            Quantity::Biorthogonal => 0.5 * phi.dot(&(w.plus * phi)),
        }
    };
    let term2 = |psi: &Vector3<f64>| -> f64 {
        match quantity {
            Quantity::Sectional => 0.5 * psi.dot(&(blocks.c * psi)),
            Quantity::Biorthogonal => 0.5 * psi.dot(&(w.minus * psi)),
        }
    };
    let constant = match quantity {
        Quantity::Sectional => 0.0,
        Quantity::Biorthogonal => s / 12.0,
    };

    let mut best_min: (f64, Vector3<f64>, Vector3<f64>) =
        (f64::INFINITY, Vector3::x(), Vector3::x());
    let mut best_max: (f64, Vector3<f64>, Vector3<f64>) =
        (f64::NEG_INFINITY, Vector3::x(), Vector3::x());
    let mut t1_min: (f64, Vector3<f64>) = (f64::INFINITY, Vector3::x());
    let mut t1_max: (f64, Vector3<f64>) = (f64::NEG_INFINITY, Vector3::x());
    let mut t2_min: (f64, Vector3<f64>) = (f64::INFINITY, Vector3::x());
    let mut t2_max: (f64, Vector3<f64>) = (f64::NEG_INFINITY, Vector3::x());

    for i in 0..n {
        let (phi, psi) = sample_pair(i, &shift);
        let v = eval(&phi, &psi);
        if v < best_min.0 {
            best_min = (v, phi, psi);
        }
        if v > best_max.0 {
            best_max = (v, phi, psi);
        }
        if separable {
            let t1 = term1(&phi);
            let t2 = term2(&psi);
            if t1 < t1_min.0 {
                t1_min = (t1, phi);
            }
            if t1 > t1_max.0 {
                t1_max = (t1, phi);
            }
            if t2 < t2_min.0 {
                t2_min = (t2, psi);
            }
            if t2 > t2_max.0 {
                t2_max = (t2, psi);
            }
        }
    }
    if separable {
        let combined_min = constant + t1_min.0 + t2_min.0;
        if combined_min < best_min.0 {
            best_min = (combined_min, t1_min.1, t2_min.1);
        }
        let combined_max = constant + t1_max.0 + t2_max.0;
        if combined_max > best_max.0 {
            best_max = (combined_max, t1_max.1, t2_max.1);
        }
    }
    SampleExtremes {
        min: ExtremeResult {
            value: best_min.0,
            witness: plane_from_pm_coords(&best_min.1, &best_min.2),
            method: Method::Sample,
            evaluations: n,
            converged: true,
        },
        max: ExtremeResult {
            value: best_max.0,
            witness: plane_from_pm_coords(&best_max.1, &best_max.2),
            method: Method::Sample,
            evaluations: n,
            converged: true,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::{random_curvature, RandomStyle};
    use crate::lambda2::FrameRotation;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use nalgebra::Matrix6;

    fn sphere4() -> CurvatureOperator {
        CurvatureOperator::new(Matrix6::identity())
    }

    fn product_unit_spheres() -> CurvatureOperator {
        let mut m = Matrix6::zeros();
        m[(0, 0)] = 1.0;
        m[(5, 5)] = 1.0;
        CurvatureOperator::new(m)
    }

    /// Fubini–Study at S = 12, assembled from its (𝔹⁺, 𝔹⁻) block form.
    fn cp2_s12() -> CurvatureOperator {
        let mut t = Matrix6::zeros();
        t[(2, 2)] = 3.0;
        t[(3, 3)] = 1.0;
        t[(4, 4)] = 1.0;
        t[(5, 5)] = 1.0;
        CurvatureOperator::new(crate::lambda2::from_pm_basis(&t))
    }

    #[test]
    fn sphere_has_constant_sectional_one() {
        let r = sphere4();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let f = FrameRotation::random(&mut rng).matrix();
            let p = Plane::new(f.column(0).into_owned(), f.column(3).into_owned()).unwrap();
            assert_relative_eq!(sectional(&r, &p), 1.0, epsilon = 1e-12);
            assert_relative_eq!(biorthogonal(&r, &p), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn coordinate_sectionals_of_cp2() {
        let r = cp2_s12();
        r.validate(1e-12).unwrap();
        assert_relative_eq!(r.scalar(), 12.0, epsilon = 1e-12);
        assert_relative_eq!(sectional(&r, &Plane::span(0, 1)), 0.5, epsilon = 1e-12);
        assert_relative_eq!(sectional(&r, &Plane::span(0, 2)), 0.5, epsilon = 1e-12);
        assert_relative_eq!(sectional(&r, &Plane::span(0, 3)), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn sectional_matches_block_parametrization() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..20 {
            let r = random_curvature(seed, RandomStyle::General);
            let blocks = PmBlocks::of(&r);
            for _ in 0..20 {
                let phi = random_unit3(&mut rng);
                let psi = random_unit3(&mut rng);
                let p = plane_from_pm_coords(&phi, &psi);
                assert_relative_eq!(
                    sectional(&r, &p),
                    blocks.sectional(&phi, &psi),
                    epsilon = 1e-11,
                    max_relative = 1e-9
                );
            }
        }
    }

    #[test]
    fn biorthogonal_is_complement_symmetric_and_matches_weyl_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..20 {
            let r = random_curvature(seed, RandomStyle::General);
            let s = r.scalar();
            let w = r.weyl_blocks();
            for _ in 0..10 {
                let phi = random_unit3(&mut rng);
                let psi = random_unit3(&mut rng);
                let p = plane_from_pm_coords(&phi, &psi);
                let direct = biorthogonal(&r, &p);
                assert_relative_eq!(
                    direct,
                    biorthogonal(&r, &orthogonal_complement(&p)),
                    epsilon = 1e-11,
                    max_relative = 1e-9
                );
                let formula =
                    s / 12.0 + 0.5 * (phi.dot(&(w.plus * phi)) + psi.dot(&(w.minus * psi)));
                assert_relative_eq!(direct, formula, epsilon = 1e-11, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn closed_form_extremes_on_models() {
        let kp = kperp_extremes_closed_form(&sphere4());
        assert_relative_eq!(kp.min.value, 1.0, epsilon = 1e-12);
        assert_relative_eq!(kp.max.value, 1.0, epsilon = 1e-12);

        let kp = kperp_extremes_closed_form(&product_unit_spheres());
        assert_abs_diff_eq!(kp.min.value, 0.0, epsilon = 1e-12);
        assert_relative_eq!(kp.max.value, 1.0, epsilon = 1e-12);

        // Fubini–Study scaled to Rc = g (S = 4): max K⊥ = 1/3 + (2/3)/2 = 2/3.
        let r = CurvatureOperator::new(cp2_s12().matrix() / 3.0);
        let kp = kperp_extremes_closed_form(&r);
        assert_relative_eq!(kp.max.value, 2.0 / 3.0, epsilon = 1e-12);
        assert_relative_eq!(kp.min.value, 1.0 / 6.0, epsilon = 1e-12);
    }

    #[test]
    fn closed_form_witnesses_attain_their_values() {
        for seed in 0..30 {
            let r = random_curvature(seed, RandomStyle::General);
            let kp = kperp_extremes_closed_form(&r);
            assert_relative_eq!(
                biorthogonal(&r, &kp.min.witness),
                kp.min.value,
                epsilon = 1e-10,
                max_relative = 1e-9
            );
            assert_relative_eq!(
                biorthogonal(&r, &kp.max.witness),
                kp.max.value,
                epsilon = 1e-10,
                max_relative = 1e-9
            );
            assert!(kp.min.value <= kp.max.value + 1e-12);
        }
    }

    #[test]
    fn sphere_subproblem_beats_fine_scan() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut q = Matrix3::zeros();
            for i in 0..3 {
                for j in i..3 {
                    let x = rng.gen_range(-2.0..2.0);
                    q[(i, j)] = x;
                    q[(j, i)] = x;
                }
            }
            let c = Vector3::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let x = sphere_quadratic_max(&q, &c);
            assert_relative_eq!(x.norm(), 1.0, epsilon = 1e-10);
            let fx = 0.5 * x.dot(&(q * x)) + c.dot(&x);
            for k in 0..2000u64 {
                let y = square_to_sphere(radical_inverse(k, 2), radical_inverse(k, 3));
                let fy = 0.5 * y.dot(&(q * y)) + c.dot(&y);
                assert!(fx >= fy - 1e-9, "scan beat subproblem: {fx} < {fy}");
            }
        }
    }

    #[test]
    fn sphere_subproblem_hard_case() {
        // c orthogonal to the top eigenspace.
        let q = Matrix3::from_diagonal(&Vector3::new(2.0, 1.0, 0.0));
        let c = Vector3::new(0.0, 0.1, 0.1);
        let x = sphere_quadratic_max(&q, &c);
        let expected_tail = Vector3::new(0.0_f64, 0.1, 0.05); // (μ−d)⁻¹c off the top space
        let t = (1.0 - expected_tail.norm_squared()).sqrt();
        let expected = Vector3::new(t, 0.1, 0.05);
        assert_abs_diff_eq!(x, expected, epsilon = 1e-12);
        // Pure eigenvector case.
        let x = sphere_quadratic_max(&q, &Vector3::zeros());
        assert_abs_diff_eq!(x, Vector3::new(1.0, 0.0, 0.0), epsilon = 1e-12);
    }

    #[test]
    fn optimizer_finds_known_extremes() {
        let r = product_unit_spheres();
        let max = sectional_extremes_optimize(&r, Target::Max, 0);
        let min = sectional_extremes_optimize(&r, Target::Min, 0);
        assert_relative_eq!(max.value, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(min.value, 0.0, epsilon = 1e-10);
        assert!(max.converged && min.converged);
        assert_relative_eq!(sectional(&r, &max.witness), 1.0, epsilon = 1e-10);

        let r = cp2_s12();
        let max = sectional_extremes_optimize(&r, Target::Max, 0);
        let min = sectional_extremes_optimize(&r, Target::Min, 0);
        assert_relative_eq!(max.value, 2.0, epsilon = 1e-10);
        assert_relative_eq!(min.value, 0.5, epsilon = 1e-10);
    }

    #[test]
    fn optimizer_dominates_sampler() {
        for seed in 0..25 {
            let r = random_curvature(seed, RandomStyle::General);
            let sample = extremes_sample(&r, Quantity::Sectional, 3000, seed);
            let max = sectional_extremes_optimize(&r, Target::Max, seed);
            let min = sectional_extremes_optimize(&r, Target::Min, seed);
            assert!(max.value >= sample.max.value - 1e-9);
            assert!(min.value <= sample.min.value + 1e-9);
            // Witness planes genuinely attain the reported values.
            assert_relative_eq!(
                sectional(&r, &max.witness),
                max.value,
                epsilon = 1e-9,
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn closed_form_dominates_biorthogonal_sampler() {
        for seed in 0..25 {
            let r = random_curvature(seed, RandomStyle::General);
            let kp = kperp_extremes_closed_form(&r);
            let sample = extremes_sample(&r, Quantity::Biorthogonal, 3000, seed);
            assert!(kp.max.value >= sample.max.value - 1e-9);
            assert!(kp.min.value <= sample.min.value + 1e-9);
            // Separable per-factor sampling is sharp enough to be close.
            assert!(kp.max.value - sample.max.value <= 1e-2);
            assert!(sample.min.value - kp.min.value <= 1e-2);
        }
    }

    #[test]
    fn biorthogonal_optimizer_agrees_with_closed_form() {
        for seed in 0..25 {
            let r = random_curvature(seed, RandomStyle::General);
            let kp = kperp_extremes_closed_form(&r);
            let max = biorthogonal_extremes_optimize(&r, Target::Max, seed);
            let min = biorthogonal_extremes_optimize(&r, Target::Min, seed);
            assert_relative_eq!(
                max.value,
                kp.max.value,
                epsilon = 1e-10,
                max_relative = 1e-10
            );
            assert_relative_eq!(
                min.value,
                kp.min.value,
                epsilon = 1e-10,
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn sampler_is_deterministic_in_seed() {
        let r = random_curvature(11, RandomStyle::General);
        let a = extremes_sample(&r, Quantity::Sectional, 500, 42);
        let b = extremes_sample(&r, Quantity::Sectional, 500, 42);
        assert_eq!(a.max.value, b.max.value);
        assert_eq!(a.min.value, b.min.value);
        let c = extremes_sample(&r, Quantity::Sectional, 500, 43);
        assert_ne!(a.max.value, c.max.value);
    }

    #[test]
    fn sampler_on_sphere_is_exact() {
        let s = extremes_sample(&sphere4(), Quantity::Sectional, 100, 0);
        assert_relative_eq!(s.min.value, 1.0, epsilon = 1e-12);
        assert_relative_eq!(s.max.value, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn einstein_sampler_uses_separable_refinement() {
        // On S²×S² the mixed block vanishes, so the per-factor combination
        // applies and 1e5 samples resolve the extremes to ~1e-4.
        let r = product_unit_spheres();
        let s = extremes_sample(&r, Quantity::Sectional, 100_000, 1);
        assert!((s.max.value - 1.0).abs() < 1e-3, "max {}", s.max.value);
        assert!(s.min.value.abs() < 1e-3, "min {}", s.min.value);
    }
}

//! Pinching pipeline: the spectral threshold, the four sufficient
//! conditions, the pointwise lemma bounds, and a discriminant certificate
//! on a constructed in-hypothesis instance.

use curv4::{
    certificate_instance, check_conditions, discriminant_certificate, lemma_bounds, model,
    threshold, CertificateFlavor, CertificateOutcome, ModelKind, PinchMode, SpectralContext,
};

fn main() {
    // The threshold T(S, λ₁) sits strictly below the round bound S/4 and
    // grows with both arguments; at (4, 4/3) it is exactly 5/6.
    println!("T(S, λ₁) against S/4:");
    for (s, l) in [(4.0, 4.0 / 3.0), (4.0, 2.0), (12.0, 4.0), (1.0, 0.1)] {
        let t = threshold(s, l).unwrap();
        println!(
            "  S = {s:5.2}, λ₁ = {l:5.3}:  T = {t:.6}  (S/4 = {:.6})",
            s / 4.0
        );
    }

    // Fubini–Study scaled to Rc = g passes a Ricci-gated condition with
    // margin exactly 1/6; the unit product of spheres fails everything.
    let cp2 = model(ModelKind::ComplexProjective, &[4.0]).unwrap();
    let ctx = SpectralContext::with_k(2.0, 1.0).unwrap();
    let rep = check_conditions(&cp2.curvature, &ctx, PinchMode::Biorthogonal).unwrap();
    println!("Fubini–Study (S = 4, k = 1): any_pass = {}", rep.any_pass);
    for c in &rep.conditions {
        println!(
            "  condition ({}) {}: measured {:.6} vs threshold {:.6}",
            c.id,
            if c.pass { "pass" } else { "fail" },
            c.measured,
            c.threshold,
        );
    }
    assert!(rep.any_pass);

    let product = model(ModelKind::ProductSpheres, &[1.0, 1.0]).unwrap();
    let ctx = SpectralContext::with_k(2.0, 1.0).unwrap();
    let rep = check_conditions(&product.curvature, &ctx, PinchMode::Biorthogonal).unwrap();
    println!("unit S²×S² (k = 1): any_pass = {}", rep.any_pass);
    assert!(!rep.any_pass);

    // Pointwise spectral bounds hold for every algebraic tensor; on the
    // product the top-eigenvalue sum bound is tight.
    let bounds = lemma_bounds(&product.curvature);
    println!(
        "pointwise bounds on S²×S²: sum identity {} (equality {}), gap bound {}",
        bounds.sum_identity.holds, bounds.sum_identity.equality, bounds.gap_bound.holds,
    );

    // A constructed instance inside the pinching hypothesis certifies the
    // key inequality by a sign condition on one quadratic discriminant.
    let (r, ctx) = certificate_instance(42);
    let cert = discriminant_certificate(&r, &ctx, CertificateFlavor::TwoForm).unwrap();
    println!("certificate on a constructed instance:");
    println!("  δ = {:.6}, threshold = {:.6}", cert.delta, cert.threshold);
    println!(
        "  leading = {:.6} > 0, constant = {:.6} > 0",
        cert.leading, cert.constant_term
    );
    println!("  discriminant = {:.3e} ≤ 0", cert.discriminant);
    println!(
        "  outcome: {:?} (α = {}, Kato exponent {})",
        cert.outcome, cert.alpha, cert.kato
    );
    assert_eq!(cert.outcome, CertificateOutcome::Pass);
}

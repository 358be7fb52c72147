//! Einstein (Rc = g) sectional gap chain: the minimum-curvature bound as a
//! function of the maximum, the Euler-characteristic coefficient it feeds,
//! and the contradiction that rules out positive intersection forms; plus
//! the sharp |W⁺|² ≥ S²/24 gap with its equality cases.

use curv4::{
    kmin_from_kmax, model, positive_intersection_contradiction, weyl_gap_check, ModelKind,
};

fn main() {
    // β(α): the guaranteed sectional minimum when the maximum is α. The
    // classical endpoints: β(1/3) = 1/3 (round), β(2/3) = 1/6.
    println!("kmin bound as a function of kmax:");
    for alpha in [1.0 / 3.0, 0.5, 2.0 / 3.0, 0.8, 1.0] {
        println!("  β({alpha:.4}) = {:.10}", kmin_from_kmax(alpha).unwrap());
    }
    assert!((kmin_from_kmax(1.0 / 3.0).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    assert!((kmin_from_kmax(2.0 / 3.0).unwrap() - 1.0 / 6.0).abs() < 1e-12);

    // The chain: pinching [β(α), α] bounds the Gauss-Bonnet integrand, so
    // χ ≤ c(α)·(something positive); a positive-definite intersection form
    // would force (2 − 4/c)χ ≥ χ, impossible while c < 4.
    println!("intersection-form contradiction chain:");
    for alpha in [1.0 / 3.0, 0.6, 0.9, 1.0] {
        let rep = positive_intersection_contradiction(alpha).unwrap();
        println!(
            "  α = {alpha:.4}: β = {:+.6}, c = {:.6}, endpoint 2−4/c = {:.6}, contradiction: {}",
            rep.beta, rep.euler_coefficient, rep.endpoint, rep.contradiction,
        );
        assert!(rep.contradiction);
    }
    let rep = positive_intersection_contradiction(1.0).unwrap();
    println!("  worst case c(1) = {:.12} < 4", rep.euler_coefficient);

    // |W⁺|² ≥ S²/24 for Einstein tensors with S > 0, with equality exactly
    // on the Kähler models: Fubini–Study and the equal-radius product.
    println!("self-dual Weyl gap |W⁺|² − S²/24:");
    for (kind, params) in [
        (ModelKind::ComplexProjective, &[12.0][..]),
        (ModelKind::ProductSpheres, &[1.0, 1.0][..]),
        (ModelKind::Sphere, &[1.0][..]),
    ] {
        let m = model(kind, params).unwrap();
        let gap = weyl_gap_check(&m.curvature).unwrap();
        println!(
            "  {:<14} |W⁺|² = {:>10.6}, bound = {:>10.6}, margin = {:+.2e}, applicable: {}",
            m.kind.to_string(),
            gap.weyl_plus_norm_sq,
            gap.bound,
            gap.margin,
            gap.applicable,
        );
    }
    let cp2 = model(ModelKind::ComplexProjective, &[12.0]).unwrap();
    assert!(weyl_gap_check(&cp2.curvature).unwrap().margin.abs() < 1e-10);
}

//! Three independent routes to curvature extremes: the closed form for
//! biorthogonal curvature, a certified multistart optimizer, and a
//! quasi-uniform sampler that can only ever shrink the range.

use curv4::{
    biorthogonal_extremes_optimize, extremes_sample, kperp_extremes_closed_form, model,
    random_curvature, sectional_extremes_optimize, ModelKind, Quantity, RandomStyle, Target,
};

fn main() {
    // Unit S²×S²: mixed planes are flat, factor planes are round, and the
    // complement of a factor plane is the other factor plane.
    let m = model(ModelKind::ProductSpheres, &[1.0, 1.0]).unwrap();
    let r = &m.curvature;
    let kmin = sectional_extremes_optimize(r, Target::Min, 42);
    let kmax = sectional_extremes_optimize(r, Target::Max, 42);
    let kp = kperp_extremes_closed_form(r);
    println!("unit S²×S²:");
    println!("  K    ∈ [{:.6}, {:.6}]", kmin.value, kmax.value);
    println!("  K⊥   ∈ [{:.6}, {:.6}]", kp.min.value, kp.max.value);
    println!("  witness plane of Kmax: {:?}", kmax.witness.basis());
    assert!(kmin.value.abs() < 1e-9 && (kmax.value - 1.0).abs() < 1e-9);

    // On a generic tensor the closed form, the optimizer, and the sampler
    // must tell one consistent story: sampled ⊆ optimized = closed form.
    let r = random_curvature(3, RandomStyle::General);
    let kp = kperp_extremes_closed_form(&r);
    let opt_min = biorthogonal_extremes_optimize(&r, Target::Min, 42);
    let opt_max = biorthogonal_extremes_optimize(&r, Target::Max, 42);
    let sampled = extremes_sample(&r, Quantity::Biorthogonal, 200_000, 42);
    println!("generic tensor:");
    println!(
        "  closed form  K⊥ ∈ [{:.9}, {:.9}]",
        kp.min.value, kp.max.value
    );
    println!(
        "  optimizer    K⊥ ∈ [{:.9}, {:.9}]",
        opt_min.value, opt_max.value
    );
    println!(
        "  sampler      K⊥ ∈ [{:.9}, {:.9}]",
        sampled.min.value, sampled.max.value
    );
    println!(
        "  optimizer evaluations: {} (min), {} (max); converged: {} / {}",
        opt_min.evaluations, opt_max.evaluations, opt_min.converged, opt_max.converged,
    );
    assert!((opt_min.value - kp.min.value).abs() < 1e-8);
    assert!((opt_max.value - kp.max.value).abs() < 1e-8);
    assert!(sampled.min.value >= kp.min.value - 1e-12);
    assert!(sampled.max.value <= kp.max.value + 1e-12);

    // Sectional extremes have no closed form in general; the optimizer
    // brackets the sampler from outside.
    let smin = sectional_extremes_optimize(&r, Target::Min, 42);
    let smax = sectional_extremes_optimize(&r, Target::Max, 42);
    let ssmp = extremes_sample(&r, Quantity::Sectional, 200_000, 42);
    println!("  optimizer    K  ∈ [{:.9}, {:.9}]", smin.value, smax.value);
    println!(
        "  sampler      K  ∈ [{:.9}, {:.9}]",
        ssmp.min.value, ssmp.max.value
    );
    assert!(ssmp.min.value >= smin.value - 1e-9 && ssmp.max.value <= smax.value + 1e-9);
}

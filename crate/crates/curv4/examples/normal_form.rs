//! Berger normal form: rotate the frame so the Weyl operator becomes the
//! diagonal-plus-antidiagonal block pattern, then verify its six
//! characteristic properties.

use curv4::{berger_normal_form, random_curvature, verify_normal_form, RandomStyle};

fn main() {
    let r = random_curvature(7, RandomStyle::General);
    let nf = berger_normal_form(&r);

    // aᵢ are averages and bᵢ half-gaps of the W± eigenvalue pairs; the
    // frame realizing them comes from one quaternion per orientation.
    println!("a = ({:.6}, {:.6}, {:.6})", nf.a[0], nf.a[1], nf.a[2]);
    println!("b = ({:.6}, {:.6}, {:.6})", nf.b[0], nf.b[1], nf.b[2]);
    let (p, q) = nf.frame.quaternions();
    println!("frame quaternions: p = {p:?}, q = {q:?}");
    let conjugated = r.conjugate(&nf.frame).decompose().weyl_part;
    println!("conjugated Weyl part:\n{conjugated:.6}");

    // The report checks the block pattern itself plus the six properties:
    // ordering, sum-zero rows, interlacing, and the eigenvalue pairing.
    let rep = verify_normal_form(&r, &nf).expect("normal form of a valid tensor verifies");
    println!("block residual {:e}", rep.block_residual);
    println!("all properties hold: {}", rep.all_hold());
    assert!(rep.all_hold());

    // a₁ and a₃ are exactly the closed-form biorthogonal extremes of the
    // Weyl part; the same numbers drive the pinching thresholds.
    let kp = curv4::kperp_extremes_closed_form(&r);
    let s = r.scalar();
    println!(
        "K⊥ extremes from the normal form: [{:.6}, {:.6}]",
        s / 12.0 + nf.a[0],
        s / 12.0 + nf.a[2],
    );
    assert!((s / 12.0 + nf.a[0] - kp.min.value).abs() < 1e-10);
    assert!((s / 12.0 + nf.a[2] - kp.max.value).abs() < 1e-10);
}

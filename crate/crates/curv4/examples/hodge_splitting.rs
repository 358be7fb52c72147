//! Hodge star on 2-forms, the self-dual / anti-self-dual splitting, and the
//! quaternion double cover of SO(4) acting block-diagonally on Λ⁺ ⊕ Λ⁻.

use curv4::lambda2::{to_pm_basis, LEX_PAIRS};
use curv4::{hodge_star, orthogonal_complement, plane_to_form, FrameRotation, Plane, TwoForm};
use nalgebra::{Matrix6, Vector6};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    // The star squares to the identity on Λ²(ℝ⁴), so 2-forms split into
    // ±1 eigenspaces of dimension 3 each.
    let star = hodge_star();
    assert_eq!(star * star, Matrix6::identity());
    println!("lex basis pairs: {LEX_PAIRS:?}");
    println!("hodge star:\n{star:.0}");

    // Split a generic 2-form and check the Pythagorean decomposition.
    let w = TwoForm::new(Vector6::new(1.0, 0.5, -0.25, 0.0, 2.0, -1.0));
    let split = w.split_selfdual();
    println!(
        "|ω|² = {:.4} = |ω⁺|² + |ω⁻|² = {:.4} + {:.4}",
        w.c.norm_squared(),
        split.plus.c.norm_squared(),
        split.minus.c.norm_squared(),
    );
    assert!((star * split.plus.c - split.plus.c).norm() < 1e-12);
    assert!((star * split.minus.c + split.minus.c).norm() < 1e-12);

    // A plane and its orthogonal complement correspond to swapping the
    // sign of the anti-self-dual half.
    let p = Plane::span(0, 1);
    let q = orthogonal_complement(&p);
    println!("e₁∧e₂ complement is spanned by e₃, e₄: {:?}", q.basis());
    assert!((plane_to_form(&q).c - star * plane_to_form(&p).c).norm() < 1e-12);

    // Frame rotations come from a pair of unit quaternions; on Λ² the
    // induced map commutes with the star and acts block-diagonally in the
    // pm basis, one 3×3 rotation per half.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let f = FrameRotation::random(&mut rng);
    let l = f.induced_lambda2();
    assert!((l * star - star * l).abs().max() < 1e-12);
    let blocks = to_pm_basis(&l);
    println!("induced Λ² action in the pm basis (block diagonal):\n{blocks:.3}");
    let off = blocks.fixed_view::<3, 3>(0, 3).abs().max();
    assert!(off < 1e-12, "mixed block must vanish, got {off:e}");
}

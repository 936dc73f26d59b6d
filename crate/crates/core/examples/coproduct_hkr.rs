//! Iterated coproducts ∐S of an algebra: QΩ ≅ ∐S on length-graded
//! pieces, and the homology of (N∐S, μ) against Ω.
//!
//!     cargo run --example coproduct_hkr

use dkring::fin_maps::generators;
use dkring::nc_geometry::{check_disk_permutation, nchkr_suite, Coproduct, QOmegaIso, StructAlgebra};
use dkring::CoeffRing;

fn main() -> dkring::Result<()> {
    let z2 = CoeffRing::modular(2)?;
    let s = StructAlgebra::dual_numbers(z2);

    let c = Coproduct::new(&s, 3);
    // x in copy 0 times x in copy 1, then x in copy 0 again
    let u = c.inject(0, &dkring::Combo::basis(1));
    let v = c.inject(1, &dkring::Combo::basis(1));
    println!("x_0 x_1 x_0 = {:?}", c.product(&c.product(&u, &v), &u));
    println!("x_0 x_0 = {:?}", c.product(&u, &u));

    let iso = QOmegaIso::new(&s, 3)?;
    for n in 0..=2 {
        iso.check(n, &generators(n).all())?;
    }
    println!("QΩ ≅ ∐S on lengths ≤ 3, levels ≤ 2");
    check_disk_permutation(CoeffRing::Integers, 3)?;
    println!("Q Z<0,1> ≅ ⊕Z permuting e_0..e_n");

    for (name, s) in [("dual numbers", s), ("upper triangular", StructAlgebra::upper_triangular(z2))] {
        let r = nchkr_suite(&s, 2, 3)?;
        let ranks: Vec<usize> = r.homology.iter().map(|h| h.1).collect();
        println!(
            "{name}: H_n(N∐S) ranks {ranks:?}, Ω ranks {:?}, shuffle ok on {} pairs: {}, B ok: {}",
            r.omega_ranks, r.shuffle_pairs, r.shuffle_ok, r.connes_ok
        );
    }
    Ok(())
}

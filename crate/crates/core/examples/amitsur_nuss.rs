//! The Amitsur complex S^{⊗(n+1)} with the twisted product built from
//! τ(s⊗t) = st⊗1 + 1⊗st − s⊗t, and its comparison with KΩ.
//!
//!     cargo run --example amitsur_nuss

use dkring::fin_maps::generators;
use dkring::nc_geometry::{Amitsur, NussComparison, Omega, StructAlgebra};
use dkring::ring_layer::fin_ring::check_ring_level;
use dkring::CoeffRing;

fn main() -> dkring::Result<()> {
    let z2 = CoeffRing::modular(2)?;
    for s in [StructAlgebra::dual_numbers(z2), StructAlgebra::upper_triangular(z2)] {
        let a = Amitsur::new(&s);
        a.check_twist()?;
        let x = s.label(1).to_string();
        println!("S = span{:?} over Z/2", s.labels());
        println!("  τ({x}⊗{x}) = {:?}", a.tau(1, 1));
        println!("  (1⊗{x})•({x}⊗1) = {:?}", a.nuss_keys(&[0, 1], &[1, 0]));
        for n in 0..=2 {
            a.check_delta_products(n)?;
            check_ring_level(&a, n)?;
        }
        a.check_moore(&Omega::new(&s, 3)?, 3)?;
        let c = NussComparison::new(&s, 3)?;
        for n in 0..=3 {
            let mut maps = generators(n).all();
            maps.retain(|m| m.target() <= 3);
            c.check(n, &maps)?;
        }
        println!("  τ² = 1, Yang–Baxter, δ-products, Moore complex = Ω, KΩ ≅ Amitsur through level 3");
    }
    Ok(())
}

//! The ring (QA, ∘) of a DG-ring, its projection to KA, and the shuffle
//! product on homotopy: l(x)⋆l(x) is homologous to l(x²).
//!
//!     cargo run --example perturbed_product

use dkring::dold_kan_core::{p_hat, FinObject, QKey};
use dkring::ring_layer::fin_ring::{check_fin_ring, homotopy_groups, is_cycle, GradedHomotopyRing};
use dkring::ring_layer::{DGRing, FinRing, KRing, QRing};
use dkring::tensor_exterior::epsilon;
use dkring::{CoeffRing, Combo};

fn main() -> dkring::Result<()> {
    // Z[x]/(x^4) with |x| = 1 and dx = x²
    let a = DGRing::truncated_polynomial(CoeffRing::Integers, 1, 4, 1, 3)?;
    let q = QRing::new(&a);
    let k = KRing::new(&a);
    check_fin_ring(&q, 2)?;
    println!("(QA, ∘) is a Fin-ring through level 2");

    let x = Combo::basis(QKey::new(1, 0, vec![1]));
    let y = Combo::basis(QKey::new(0, 0, vec![]));
    println!("(x⊗v1)∘(x⊗v1) = {:?}", q.mul(1, &x, &x));
    println!("p̂ of it = {:?}", p_hat(&q.mul(1, &x, &x)));
    println!("p̂x · p̂x in KA = {:?}", k.mul(1, &p_hat(&x), &p_hat(&x)));
    println!("unit: {:?}", q.mul(1, &y, &x) == x);

    let h = homotopy_groups(&q, 3)?;
    println!("π_n QA: {:?}", h.betti());

    let l = |m: usize| epsilon(m).terms.map_keys(|w| QKey::new(m, 0, w.clone()));
    let pi = GradedHomotopyRing::new(&q, 3);
    let prod = pi.star(1, &l(1), 1, &l(1))?;
    println!("l(x)⋆l(x) is a cycle: {}", is_cycle(&q, 2, &prod)?);
    println!("l(x)⋆l(x) ~ l(x²): {}", pi.same_class(2, &prod, &l(2))?);
    println!("rank Q^3 A = {}", q.basis(3).len());
    Ok(())
}

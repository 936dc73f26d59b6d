//! Free tensor algebras: the map T(QU) → Q(TU) built from υ is an
//! isomorphism of Fin-rings, and coproducts of disks go to disks of sums.
//!
//!     cargo run --example tensor_algebra

use dkring::fin_maps::generators;
use dkring::ring_layer::monoidal::upsilon_key;
use dkring::ring_layer::{MKey, MultiQ, QtIso, TensorAlgebra};
use dkring::dold_kan_core::BaseComplex;
use dkring::{BoundedComplex, CoeffRing, Matrix};

fn main() -> dkring::Result<()> {
    let z = CoeffRing::Integers;
    let t = TensorAlgebra::disk(z, 0, 3, 3)?;
    println!("T D(0) ranks by degree: {:?}", t.dg().ranks());
    println!("H(T D(0)) = {:?}", t.dg().complex().cohomology()?.betti());

    // υ((a⊗v1)⊗(b⊗1)) with db = 2b'
    let times_two = BoundedComplex::from_ranks(z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]])?])?;
    let q = MultiQ::new(vec![BaseComplex::new(&times_two, 3)])?;
    let x = MKey { factors: vec![(1, 0)], word: vec![1] };
    let y = MKey { factors: vec![(0, 0)], word: vec![] };
    println!("υ = {:?}", upsilon_key(&x, &y, &q));

    let disk = BoundedComplex::disk(z, 0);
    for parts in [vec![disk.clone()], vec![disk.clone(), disk]] {
        let iso = QtIso::new(&parts, 3, 3)?;
        for n in 0..=2 {
            iso.check(n, &generators(n).all())?;
        }
        println!("{} disk(s): T Q ≅ Q T on words ≤ 3, levels ≤ 2", parts.len());
    }
    Ok(())
}

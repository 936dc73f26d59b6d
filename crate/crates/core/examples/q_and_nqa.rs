//! The functor Q on a complex, the projection p̂ onto K, and the mixed
//! complex (N QA, μ, B) with its comparison map l: A → N QA.
//!
//!     cargo run --example q_and_nqa

use dkring::dold_kan_core::{equivalence_check, p_hat, FinObject, KObject, MixedComplex, Nqa, QKey, QObject};
use dkring::{BoundedComplex, CoeffRing, Combo, FinMap, Matrix};
use num_bigint::BigInt;

fn main() -> dkring::Result<()> {
    let z = CoeffRing::Integers;
    let a = BoundedComplex::from_ranks(z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]])?])?;
    let q = QObject::new(&a, 4);
    let k = KObject::new(&a, 4);

    // α(a⊗x) = a⊗αx + da⊗v_{α(0)}αx
    let x = Combo::basis(QKey::new(0, 0, vec![1]));
    let alpha: FinMap = "1->2:[2,1]".parse()?;
    let ax = q.act(&alpha, &x);
    println!("{alpha} on a⊗v1 = {ax:?}");
    println!("p̂ commutes with it: {}", p_hat(&ax) == k.act(&alpha, &p_hat(&x)));

    let n = Nqa::from_complex(&a, 4)?;
    println!("ranks of N QA: {:?}", n.dims());
    let r = n.retraction()?;
    r.verify(&n)?;
    println!("p̂j = 1 and h∂ + ∂h = 1 − jp̂ hold");

    let mixed = n.mixed()?;
    let source = MixedComplex::from_complex(&a, |_| BigInt::from(1))?;
    let rep = equivalence_check(&source, &mixed, &n.l_map())?;
    println!("H(N QA, μ) = {:?}; l is an equivalence: {}", rep.target.betti(), rep.is_equivalence);

    let z5 = CoeffRing::modular(5)?;
    let n5 = Nqa::from_complex(&a.reduce_ring(z5), 4)?;
    let back = n5.rescaled_p_hat_map()?;
    back.check(&n5.mixed()?, &MixedComplex::from_complex(&a.reduce_ring(z5), |_| BigInt::from(1))?)?;
    println!("over Z/5, p̂/n! is a mixed map back to A");
    Ok(())
}

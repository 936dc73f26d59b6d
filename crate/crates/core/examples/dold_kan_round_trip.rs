//! Dold-Kan on a random cochain complex: build the cosimplicial group K(A),
//! normalize it, and compare with A. Also reads cohomotopy off K(A).
//!
//!     cargo run --example dold_kan_round_trip [seed]

use dkring::dold_kan_core::{cohomotopy, normalize, FinObject, KObject, QObject};
use dkring::exact_linear::random::random_complex;
use dkring::CoeffRing;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> dkring::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_complex(CoeffRing::Integers, 3, 2, &mut rng);
    println!("A = {}", a.to_json());

    let k = KObject::new(&a, a.top());
    let ranks: Vec<usize> = (0..=4).map(|n| k.basis(n).len()).collect();
    println!("rank K^n A for n ≤ 4: {ranks:?}");

    let n = normalize(&k, a.top())?;
    println!("N K A = {}", n.complex.to_json());
    let same = n.complex.ranks() == a.ranks()
        && n.complex.differentials().iter().zip(a.differentials()).all(|(x, y)| x == y);
    println!("N(K(A)) = A: {same}");

    let pi = cohomotopy(&k, a.top())?;
    println!("π^* K A = {:?}, H^* A = {:?}", pi.betti(), a.cohomology()?.betti());

    // Q A is bigger than K A but has the same cohomotopy
    let q = QObject::new(&a, a.top());
    println!("rank Q^2 A = {}, rank K^2 A = {}", q.basis(2).len(), k.basis(2).len());
    Ok(())
}

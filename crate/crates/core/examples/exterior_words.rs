//! Words in the letters v_1..v_n: the Fin action on tensor words, the
//! projection p to the exterior algebra, and the antisymmetrizers ε_n.
//!
//!     cargo run --example exterior_words

use dkring::tensor_exterior::{epsilon, fin_action_t, project_p, surjections, theta, TensorElt};
use dkring::{Combo, FinMap};

fn main() -> dkring::Result<()> {
    for n in 1..=4 {
        let e = epsilon(n);
        println!("p(ε_{n}) = {}", project_p(&e));
    }
    println!("ε_2 = {}", epsilon(2));

    // v_i ↦ v_{α(i)} − v_{α(0)}, with v_0 = 0
    let x = TensorElt::word(2, &[1, 2])?;
    let alpha: FinMap = "2->2:[1,0,2]".parse()?;
    println!("{alpha} on {x} = {}", fin_action_t(&alpha, &x)?);
    println!("θ({x}) = {}", theta(&x));

    let y = TensorElt::new(2, Combo::basis(vec![2, 1]))?;
    println!("({x})·({y}) = {}", x.mul(&y)?);
    println!("surjective words of length 3 onto 2 letters: {}", surjections(3, 2).len());
    Ok(())
}

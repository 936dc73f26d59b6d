//! Noncommutative differential forms of a finite algebra given by structure
//! constants: bases, products by the push-through rule, d, and the
//! universal property for DG-rings receiving S.
//!
//!     cargo run --example differential_forms [algebra.json]

use dkring::nc_geometry::{Omega, StructAlgebra};
use dkring::{CoeffRing, Combo};

fn main() -> dkring::Result<()> {
    let s = match std::env::args().nth(1) {
        Some(path) => StructAlgebra::from_json(&serde_json::from_str(&std::fs::read_to_string(path)?)?)?,
        None => StructAlgebra::upper_triangular(CoeffRing::Integers),
    };
    println!("S has basis {:?}, commutative: {}", s.labels(), s.is_commutative());
    let o = Omega::new(&s, 3)?;
    for n in 0..=3 {
        println!("Ω^{n}: rank {}", o.basis(n).len());
    }

    // (da)·b = d(ab) − a db
    let da = o.basis(1).keys()[0].clone();
    let b = o.basis(0).keys()[1].clone();
    let labels = o.dg().complex();
    let show = |deg: usize, x: &Combo<Vec<u8>>| -> String {
        let basis = o.basis(deg);
        let terms: Vec<String> = x
            .iter()
            .map(|(f, c)| format!("{c}·{}", labels.module(deg).unwrap().label(basis.position(f).unwrap())))
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    };
    let (l1, l0) = (labels.module(1).unwrap().label(0), labels.module(0).unwrap().label(1));
    println!("({l1})·({l0}) = {}", show(1, &o.mul_forms(&da, &b)));
    println!("d({l0}) = {}", show(1, &Omega::d_form(&b)));

    // the identity S → Ω^0 extends to the identity of Ω
    let id: Vec<_> = (0..s.rank()).map(|i| Combo::basis((0, i))).collect();
    let maps = o.extend(o.dg(), &id)?;
    println!("extension of the identity is the identity: {}", maps.iter().all(|m| m.is_identity()));
    Ok(())
}

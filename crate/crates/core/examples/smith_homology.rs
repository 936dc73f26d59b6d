//! Cohomology of small integer complexes through Smith normal form, and the
//! same complex read over Z/2.
//!
//!     cargo run --example smith_homology

use dkring::exact_linear::smith;
use dkring::{BoundedComplex, CoeffRing, Matrix};

fn show(name: &str, c: &BoundedComplex) -> dkring::Result<()> {
    let h = c.cohomology()?;
    for row in h.csv_rows(name) {
        println!("{row}");
    }
    Ok(())
}

fn main() -> dkring::Result<()> {
    let m = Matrix::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let s = smith::smith(&m);
    println!("invariant factors of {m:?}: {:?}", s.diagonal());

    println!("object,degree,betti,torsion,truncated");
    let z = CoeffRing::Integers;
    let times_two = BoundedComplex::from_ranks(z, &[1, 1], vec![Matrix::from_i64_rows(&[vec![2]])?])?;
    show("times_two", &times_two)?;
    show("times_two_mod2", &times_two.reduce_ring(CoeffRing::modular(2)?))?;
    show("sphere2", &BoundedComplex::sphere(z, 2))?;
    show("disk0", &BoundedComplex::disk(z, 0))?;
    // Z^2 -> Z^2 -> Z with d1 d0 = 0
    let d0 = Matrix::from_i64_rows(&[vec![1, -1], vec![2, -2]])?;
    let d1 = Matrix::from_i64_rows(&[vec![2, -1]])?;
    show("sample", &BoundedComplex::from_ranks(z, &[2, 2, 1], vec![d0, d1])?)?;
    Ok(())
}

//! Set maps between finite ordinals: parsing, composition, the generating
//! maps of each level and the simplicial structure they carry.
//!
//!     cargo run --example fin_maps

use dkring::fin_maps::{generators, simplicial_view};
use dkring::FinMap;

fn main() -> dkring::Result<()> {
    let alpha: FinMap = "2->3:[3,0,0]".parse()?;
    let beta: FinMap = "3->1:[0,1,1,0]".parse()?;
    let composite = alpha.then(&beta)?;
    println!("{alpha} then {beta} = {composite}");
    println!("monotone: {}, injective: {}", alpha.is_monotone(), alpha.is_injective());

    // every map splits as codegeneracies followed by cofaces when monotone
    let mono: FinMap = "3->2:[0,0,1,2]".parse()?;
    let (surj, inj) = mono.monotone_factorization()?;
    println!("{mono}: {} codegeneracies, {} cofaces", surj.len(), inj.len());

    for n in 0..3 {
        let g = generators(n);
        let names: Vec<String> = g.all().iter().map(ToString::to_string).collect();
        println!("level {n}: {}", names.join(" "));
    }

    let view = simplicial_view(2);
    let faces: Vec<String> = view.faces.iter().map(ToString::to_string).collect();
    println!("faces d_i of [2] (d_2 sends 2 to 0): {}", faces.join(" "));
    println!("{} maps [1] -> [2] in all", FinMap::all(1, 2).len());
    Ok(())
}

//! Noncommutative differential forms, the Amitsur cosimplicial ring with
//! the Nuss product, the coproduct Fin-ring and their identifications.

pub mod amitsur;
pub mod coproduct;
pub mod hkr;
pub mod omega;
pub mod struct_algebra;

pub use amitsur::{Amitsur, Legs, NussComparison};
pub use coproduct::{check_disk_permutation, CWord, Coproduct, QOmegaIso};
pub use hkr::{nchkr_suite, Hkr, HkrReport};
pub use omega::{Form, Omega};
pub use struct_algebra::{Elem, StructAlgebra};

//! DG-rings, Fin-rings, the monoidal structure of `Q` and the shuffle
//! product on homotopy.

pub mod dg_ring;
pub mod fin_ring;
pub mod monoidal;
pub mod tensor_algebra;

pub use dg_ring::DGRing;
pub use monoidal::{upsilon, MKey, MultiQ};
pub use fin_ring::{check_fin_ring, shuffle_product, FinRing, GradedHomotopyRing, KRing, QRing};
pub use tensor_algebra::{FreeTQ, QtIso, TensorAlgebra};

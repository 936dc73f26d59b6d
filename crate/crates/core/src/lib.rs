//! Exact computations around the Dold-Kan correspondence for DG-rings and
//! cosimplicial rings.

pub mod cli;
pub mod combo;
pub mod dold_kan_core;
pub mod error;
pub mod exact_linear;
pub mod fin_maps;
pub mod nc_geometry;
pub mod ring_layer;
pub mod tensor_exterior;
pub mod verify;

pub use combo::Combo;
pub use error::{Error, Result};
pub use exact_linear::{BoundedComplex, CoeffRing, Matrix};
pub use fin_maps::FinMap;

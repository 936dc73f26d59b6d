//! Exact linear algebra over `Z` and `Z/m`: matrices, Smith normal form,
//! bounded cochain complexes, cohomology and contractions.

pub mod coeff;
pub mod complex;
pub mod contraction;
pub mod matrix;
pub mod random;
pub mod smith;

pub use coeff::CoeffRing;
pub use complex::{cone, is_quasi_isomorphism, BoundedComplex, ChainMap, DegreeHomology, FreeModule, HomologySummary, LinMap};
pub use contraction::{contraction, Contraction};
pub use matrix::Matrix;
pub use smith::{smith, Smith};

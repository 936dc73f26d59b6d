//! Cosimplicial abelian groups, the functors `N`, `K`, `Q`, and the
//! comparison maps between `Q` and `K`.

pub mod barf;
pub mod cosimplicial;
pub mod mixed;
pub mod nqa;
pub mod qk;

pub use barf::{bar, BarData, PathObject, QMap};
pub use cosimplicial::{cohomotopy, normalize, CosimplicialAb, FinObject, Normalized};
pub use mixed::{equivalence_check, EquivalenceReport, MixedComplex, MixedMap};
pub use nqa::{Nqa, Retraction, WordComplex};
pub use qk::{p_hat, BaseComplex, KObject, QKey, QObject};

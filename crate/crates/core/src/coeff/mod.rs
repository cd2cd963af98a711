//! Exact coefficient rings.

pub mod laurent;
pub mod localized;
pub mod subst;

pub use laurent::{LaurentPoly, Var};
pub use localized::{cyclo, LocalizedCoeff};
pub use subst::Substitution;

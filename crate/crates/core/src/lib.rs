//! Exact Kauffman bracket skein computations for the solid torus and for
//! `S^1 x S^2`, starting from mixed braid words.
//!
//! Two evaluation paths are provided: an algebraic one through the type-B
//! Temperley-Lieb algebra and its Markov trace ([`tl`]), and a diagrammatic
//! state sum over smoothings of the braid closure ([`annular`]). The
//! [`system`] module builds the band-move relations on top of both.

pub mod annular;
pub mod braid;
pub mod coeff;
pub mod error;
pub mod io;
pub mod system;
pub mod tl;

pub use error::{Error, Result};

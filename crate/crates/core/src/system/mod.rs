//! The relations of the skein module of `S^1 x S^2`: the braid band move
//! system on the invariant `V`, the band move system on diagrams, and the
//! resulting presentation.

pub mod bandmove;
pub mod bbm;
pub mod presentation;
pub mod xexpr;

pub use bandmove::{
    band_move_rhs, equation_for, equation_for_via, expression_to_bst, that_to_bst, that_to_bst_via, that_word,
    EquationRow, Path,
};
pub use bbm::{bbm_equation_for, bbm_word, closure_coordinates, collapse, eliminate, Elimination, Solved};
pub use presentation::{build_presentation, Annihilator, Containment, FactorMatch, Presentation};
pub use xexpr::{descend, xn_expand, DSymbol, XExpression};

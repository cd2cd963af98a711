//! Diagrammatic evaluation: Kauffman bracket state sums of mixed braid
//! closures in the solid torus, expressed in the basis `t^n`.

pub mod skein;
pub mod state;
pub mod xpoly;

pub use skein::{delta, merge, SkeinVector};
pub use state::{
    closure_curve, evaluate_closure, evaluate_closure_with_cap, merge_windings, smooth_states, trace_components, SmoothingState,
    TerminalState, Tile, DEFAULT_CAP,
};
pub use xpoly::XPoly;

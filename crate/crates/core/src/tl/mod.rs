//! Algebraic evaluation: the type-B Hecke algebra `H_{1,n}` (through which the
//! Temperley-Lieb quotient's trace factors), its Markov trace and the
//! invariant `V`, and the reduction of algebra elements to the basis `t^n`.

pub mod closure;
pub mod element;
pub mod twostrand;
pub mod lemmas;
pub mod reduce;
pub mod trace;

pub use closure::{close, ClosureRules};
pub use element::{quadratic_reduce, AlgebraElement, Monomial};
pub use lemmas::{convert_to_primed, lemma_l1_expand, tl_ideal_element};
pub use reduce::{reduce_to_bst, reduce_to_bst_with, SkeinRules};
pub use trace::{invariant_V, markov_trace, trace_element, v_prefactor, TracePolynomial};

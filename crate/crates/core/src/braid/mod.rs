//! Mixed braid words, looping elements, moves and orderings.

pub mod looping;
pub mod moves;
pub mod order;
pub mod word;

pub use looping::{index_of, LoopKind, LoopMonomial};
pub use moves::{apply_move, Move};
pub use order::{compare_d, compare_loops, compare_monomials};
pub use word::{expand_looping, parse_word, Generator, Letter, MixedBraidWord};

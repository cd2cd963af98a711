use std::cmp::Ordering;

use super::looping::{index_of, LoopMonomial};

/// Ordering on loop monomials: exponent sum, then index, then index
/// sequence (a smaller index at the first difference makes the monomial
/// larger), then exponents read from the last factor backwards (smaller
/// absolute value first, and for equal absolute values the positive one
/// first).
///
/// Monomials with identical loop parts are separated by tail length and then
/// tail letters, so that the result is a total order on monomials.
pub fn compare_monomials(a: &LoopMonomial, b: &LoopMonomial) -> Ordering {
    compare_loops(a, b)
        .then_with(|| a.tail().len().cmp(&b.tail().len()))
        .then_with(|| a.tail().letters().cmp(b.tail().letters()))
        .then_with(|| a.kind().cmp(&b.kind()))
}

/// The loop-part comparison alone (ignores tails).
pub fn compare_loops(a: &LoopMonomial, b: &LoopMonomial) -> Ordering {
    let by_sum = a.exponent_total().cmp(&b.exponent_total());
    if by_sum != Ordering::Equal {
        return by_sum;
    }
    let by_ind = index_of(a).cmp(&index_of(b));
    if by_ind != Ordering::Equal {
        return by_ind;
    }
    for (i, j) in a.exponents().keys().zip(b.exponents().keys()) {
        if i != j {
            return j.cmp(i);
        }
    }
    for (k, l) in a.exponents().values().rev().zip(b.exponents().values().rev()) {
        if k != l {
            return match k.abs().cmp(&l.abs()) {
                Ordering::Equal => l.cmp(k),
                o => o,
            };
        }
    }
    Ordering::Equal
}

/// Ordering on `x_n that^m`, given as pairs `(n, m)`: total degree first,
/// then the `x` index.
pub fn compare_d(a: (u32, u32), b: (u32, u32)) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

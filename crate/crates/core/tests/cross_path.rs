//! The state sum, the algebra and the band move expansion against each other.

use kbsm::annular::{evaluate_closure, SkeinVector, XPoly};
use kbsm::braid::parse_word;
use kbsm::coeff::{LaurentPoly, LocalizedCoeff, Substitution, Var};
use kbsm::system::{closure_coordinates, collapse, equation_for, equation_for_via, that_to_bst_via, Path};
use kbsm::tl::{invariant_V, reduce_to_bst_with, AlgebraElement, TracePolynomial};

fn both(text: &str, n: usize, sub: Substitution) -> (SkeinVector, SkeinVector) {
    let w = parse_word(text, n).unwrap();
    let alg = reduce_to_bst_with(&AlgebraElement::from_word(&w).unwrap(), sub).unwrap();
    (alg, evaluate_closure(&w).unwrap().shift(w.exponent_sum()))
}

#[test]
fn substitution_does_not_change_the_class() {
    for (text, n) in [("t t1'", 2), ("t^2 s1 t^-1 s1^-1", 2), ("t s1 s2 t s2^-1 s1", 3), ("t1^2 s1^-1", 2)] {
        let (sq, dia) = both(text, n, Substitution::Square);
        let (neg, _) = both(text, n, Substitution::NegInvSquare);
        assert_eq!(sq, dia, "{text}");
        assert_eq!(neg, dia, "{text}");
    }
}

#[test]
fn that_powers_on_every_path() {
    for m in 0..=4 {
        let skein = that_to_bst_via(m, Path::Skein).unwrap();
        assert_eq!(that_to_bst_via(m, Path::Algebra).unwrap(), skein, "m = {m}");
        assert_eq!(that_to_bst_via(m, Path::DIAGRAM).unwrap(), skein, "m = {m}");
    }
}

#[test]
fn rows_on_every_path() {
    for n in 1..=4 {
        let row = equation_for(n);
        assert_eq!(equation_for_via(n, Path::Algebra).unwrap(), row, "n = {n}");
        assert_eq!(equation_for_via(n, Path::DIAGRAM).unwrap(), row, "n = {n}");
    }
}

#[test]
fn x_basis_round_trip() {
    for n in 0..=6 {
        let x = XPoly::basis(n);
        assert_eq!(XPoly::from_skein(&x.to_skein().unwrap()), x);
    }
}

/// Under `u = -A^-2` the invariant V of a closed braid, once its trace
/// products are collapsed, is `(-1)^(c-1) (-A^3)^-e <L>` in closure
/// coordinates, `c` the number of components. The sign is computed as
/// `(-1)^(n-1-e)`, which has the same parity.
#[test]
fn invariant_collapses_to_the_bracket() {
    let sub = Substitution::NegInvSquare;
    for (text, n) in [("t s1 t s1^-1", 2), ("t^2", 1), ("t t1'", 2), ("s1 t s1", 2), ("t s1 s2 t s2^-1 s1^-1", 3), ("t1' s2 t", 3)] {
        let w = parse_word(text, n).unwrap();
        let v = collapse(&invariant_V(&w).unwrap(), sub).unwrap();
        let mut expected = TracePolynomial::zero();
        let bracket = closure_coordinates(&evaluate_closure(&w).unwrap());
        let e = w.exponent_sum();
        let sign = if e % 2 == 0 { 1 } else { -1 };
        let writhe = LaurentPoly::monomial(Var::A, sign, -3 * e);
        for (k, c) in bracket.terms() {
            let pulled = sub.pull_back(&(c * &writhe)).unwrap();
            let key = if k == 0 { vec![] } else { vec![k as i64] };
            expected.add_term(key, &LocalizedCoeff::from_poly(pulled));
        }
        if (n as i64 - 1 - e).rem_euclid(2) == 1 {
            expected = expected.scale_poly(&LaurentPoly::constant(Var::U, -1));
        }
        assert_eq!(v, expected, "{text}");
    }
}

use super::closure::{close, ClosureRules};
use super::element::AlgebraElement;
use crate::annular::{closure_curve, delta, SkeinVector};
use crate::coeff::{LaurentPoly, Substitution, Var};
use crate::error::Result;

/// Closure rules valued in the skein module of the solid torus, with
/// `g_i = A sigma_i`: a crossing removed by stabilization costs `-A^4`, an
/// idle strand is a trivial loop and a last-strand loop `t'_n^k` is a
/// separate curve winding `k` times.
pub struct SkeinRules {
    pub sub: Substitution,
}

impl ClosureRules for SkeinRules {
    type Value = SkeinVector;

    fn zero(&self) -> SkeinVector {
        SkeinVector::zero()
    }

    fn base(&self, k: i64) -> Result<SkeinVector> {
        Ok(closure_curve(k))
    }

    fn free(&self, v: &SkeinVector) -> SkeinVector {
        v.scale(&delta())
    }

    fn stab(&self, v: &SkeinVector) -> SkeinVector {
        v.scale(&LaurentPoly::monomial(Var::A, -1, 4))
    }

    fn outer(&self, k: i64, v: &SkeinVector) -> Result<SkeinVector> {
        Ok(v.product(&closure_curve(k)))
    }

    fn add_scaled(&self, acc: &mut SkeinVector, c: &LaurentPoly, v: &SkeinVector) -> Result<()> {
        *acc = &*acc + &v.scale(&self.sub.apply(c)?);
        Ok(())
    }
}

/// The class of the closure of `e` in the basis `t^n`, with `u -> A^2`.
///
/// For the image of a word `w` this is `A^e(w)` times the bracket of its
/// closure, `e` the exponent sum, since each `g_i` is `A sigma_i`.
pub fn reduce_to_bst(e: &AlgebraElement) -> Result<SkeinVector> {
    reduce_to_bst_with(e, Substitution::Square)
}

pub fn reduce_to_bst_with(e: &AlgebraElement, sub: Substitution) -> Result<SkeinVector> {
    close(e, &SkeinRules { sub })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annular::evaluate_closure;
    use crate::braid::parse_word;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn parallel_pair() {
        let e = AlgebraElement::from_word(&parse_word("t t1'", 2).unwrap()).unwrap();
        let v = reduce_to_bst(&e).unwrap();
        assert_eq!(v, SkeinVector::from_terms([(2, a(&[(-2, -1)])), (0, a(&[(2, -1)]))]));
    }

    #[test]
    fn agrees_with_state_sum() {
        for (text, n) in [
            ("t^5", 1),
            ("s1", 2),
            ("t1 s1", 2),
            ("t1^2 s1^-1", 2),
            ("t^2 t1'", 2),
            ("t t1' t2'", 3),
            ("s1 t s1 t^-1 s2 t", 3),
            ("t^-2", 1),
            ("t s1^-1 t^-1 s1^-1", 2),
            ("t1'^3 t s1 t^-2", 2),
            ("t2'^2 t1'^-1 t s2 s1^-1", 3),
            ("t^-1 s1 t s1^-1 t1'^-2 t", 2),
            ("s3 t2' t s1 t3'^-1 s2^-1", 4),
        ] {
            let w = parse_word(text, n).unwrap();
            let alg = reduce_to_bst(&AlgebraElement::from_word(&w).unwrap()).unwrap();
            let diag = evaluate_closure(&w).unwrap().shift(w.exponent_sum());
            assert_eq!(alg, diag, "{text}");
        }
    }
}

use super::element::AlgebraElement;
use super::twostrand::d;
use crate::braid::{parse_word, LoopMonomial, MixedBraidWord};
use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};

fn word(text: &str, n: usize) -> Result<AlgebraElement> {
    AlgebraElement::from_word(&parse_word(text, n)?)
}

/// Right-hand side of the expansion of `t_1^n sigma_1^sign` up to closure:
/// `t^n sigma_1 + sum d t^i t_1^(n-i)`, over `0 <= i < n` for `sign = +1`
/// and `1 <= i < n` for `sign = -1`.
pub fn lemma_l1_expand(n: u32, sign: i8) -> Result<AlgebraElement> {
    if n == 0 {
        return word(if sign > 0 { "s1" } else { "s1^-1" }, 2);
    }
    let mut e = word(&format!("t^{n} s1"), 2)?;
    let start = if sign > 0 { 0 } else { 1 };
    for i in start..n {
        e = e.add(&word(&format!("t^{i} t1^{}", n - i), 2)?.scale(&d()));
    }
    Ok(e)
}

/// A loop monomial of either kind written in the primed basis
/// `t'_{i1}^{k1} .. t'_{ir}^{kr} g_w`.
pub fn convert_to_primed(m: &LoopMonomial) -> Result<AlgebraElement> {
    AlgebraElement::from_loop_monomial(m)
}

/// Terms of `1 + u(g_i + g_{i+1}) + u^2(g_i g_{i+1} + g_{i+1} g_i) + u^3 g_i g_{i+1} g_i`
/// as (coefficient, word) pairs on `n` strands.
pub fn tl_ideal_terms(i: usize, n: usize) -> Result<Vec<(LaurentPoly, MixedBraidWord)>> {
    if i == 0 || n < i + 2 {
        return Err(Error::IndexOutOfRange { index: i + 1, strands: n, pos: 0 });
    }
    let j = i + 1;
    let u = |k: i64| LaurentPoly::power(Var::U, k);
    let texts = [
        (u(0), String::new()),
        (u(1), format!("s{i}")),
        (u(1), format!("s{j}")),
        (u(2), format!("s{i} s{j}")),
        (u(2), format!("s{j} s{i}")),
        (u(3), format!("s{i} s{j} s{i}")),
    ];
    texts.into_iter().map(|(c, t)| Ok((c, parse_word(&t, n)?))).collect()
}

/// The generator of the Temperley-Lieb ideal at `i`, on `n` strands.
pub fn tl_ideal_element(i: usize, n: usize) -> Result<AlgebraElement> {
    let mut e = AlgebraElement::zero(n);
    for (c, w) in tl_ideal_terms(i, n)? {
        e = e.add(&AlgebraElement::from_word(&w)?.scale(&c));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::trace::{markov_trace, trace_element, TracePolynomial};

    fn tr_word(text: &str) -> TracePolynomial {
        markov_trace(&parse_word(text, 2).unwrap()).unwrap()
    }

    #[test]
    fn l1_matches_trace_of_source() {
        for n in 1..=4u32 {
            let plus = trace_element(&lemma_l1_expand(n, 1).unwrap()).unwrap();
            assert_eq!(plus, tr_word(&format!("t1^{n} s1")), "n={n} +");
            let minus = trace_element(&lemma_l1_expand(n, -1).unwrap()).unwrap();
            assert_eq!(minus, tr_word(&format!("t1^{n} s1^-1")), "n={n} -");
        }
    }

    #[test]
    fn l1_base_case_shape() {
        let e = lemma_l1_expand(1, 1).unwrap();
        let expect = word("t1", 2).unwrap().scale(&d()).add(&word("t s1", 2).unwrap());
        assert_eq!(e, expect);
    }

    #[test]
    fn ideal_element_trace_vanishes() {
        // the trace factors through the Temperley-Lieb quotient
        for (i, n) in [(1, 3), (2, 4), (1, 4)] {
            let e = tl_ideal_element(i, n).unwrap();
            assert!(trace_element(&e).unwrap().is_zero(), "i={i} n={n}");
        }
        let e = tl_ideal_element(1, 3).unwrap().mul(&word("t", 3).unwrap()).unwrap();
        assert!(trace_element(&e).unwrap().is_zero());
    }

    #[test]
    fn ideal_needs_room() {
        assert!(tl_ideal_element(2, 3).is_err());
    }
}

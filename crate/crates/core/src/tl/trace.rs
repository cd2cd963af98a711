use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::closure::{close, ClosureRules};
use super::element::AlgebraElement;
use crate::braid::MixedBraidWord;
use crate::coeff::{LaurentPoly, LocalizedCoeff, Var};
use crate::error::{Error, Result};

/// Combination of monomials in the trace symbols `s_k`, coefficients in the
/// localization of `Z[u^±1]`. A key is the sorted list of indices; `s_0 = 1`
/// is never stored, so the empty key is the constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TracePolynomial {
    terms: BTreeMap<Vec<i64>, LocalizedCoeff>,
}

fn canonical(mut key: Vec<i64>) -> Vec<i64> {
    key.retain(|&k| k != 0);
    key.sort_unstable();
    key
}

impl TracePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(LocalizedCoeff::one(Var::U))
    }

    pub fn constant(c: LocalizedCoeff) -> Self {
        Self::term(Vec::new(), c)
    }

    /// `s_k` (which is `1` for `k = 0`).
    pub fn s(k: i64) -> Self {
        Self::term(vec![k], LocalizedCoeff::one(Var::U))
    }

    pub fn term(key: Vec<i64>, c: LocalizedCoeff) -> Self {
        let mut p = Self::zero();
        p.add_term(key, &c);
        p
    }

    pub fn add_term(&mut self, key: Vec<i64>, c: &LocalizedCoeff) {
        if c.is_zero() {
            return;
        }
        let key = canonical(key);
        let slot = self.terms.entry(key.clone()).or_insert_with(|| LocalizedCoeff::zero(Var::U));
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i64], &LocalizedCoeff)> + '_ {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, key: &[i64]) -> LocalizedCoeff {
        self.terms.get(&canonical(key.to_vec())).cloned().unwrap_or_else(|| LocalizedCoeff::zero(Var::U))
    }

    pub fn scale(&self, c: &LocalizedCoeff) -> Self {
        let mut p = Self::zero();
        for (k, x) in &self.terms {
            p.add_term(k.clone(), &(x * c));
        }
        p
    }

    pub fn scale_poly(&self, c: &LaurentPoly) -> Self {
        self.scale(&LocalizedCoeff::from_poly(c.clone()))
    }

    /// Multiply every monomial by `s_k`.
    pub fn times_s(&self, k: i64) -> Self {
        let mut p = Self::zero();
        for (key, x) in &self.terms {
            let mut key = key.clone();
            key.push(k);
            p.add_term(key, x);
        }
        p
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (k1, x) in &self.terms {
            for (k2, y) in &other.terms {
                let mut key = k1.clone();
                key.extend_from_slice(k2);
                p.add_term(key, &(x * y));
            }
        }
        p
    }

    /// Highest `|k|` among the symbols present, `0` for a constant.
    pub fn max_index(&self) -> i64 {
        self.terms.keys().flat_map(|k| k.iter().map(|x| x.abs())).max().unwrap_or(0)
    }
}

/// `s_1^2 s_3`, and `1` for the empty monomial.
pub fn monomial_label(key: &[i64]) -> String {
    if key.is_empty() {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < key.len() {
        let mut j = i;
        while j < key.len() && key[j] == key[i] {
            j += 1;
        }
        let e = j - i;
        parts.push(if e == 1 { format!("s_{}", key[i]) } else { format!("s_{}^{e}", key[i]) });
        i = j;
    }
    parts.join(" ")
}

/// Inverse of [`monomial_label`]; also accepts `s_0`.
pub fn parse_monomial_label(text: &str) -> Result<Vec<i64>> {
    let bad = || Error::Parse { pos: 0, msg: format!("bad trace monomial `{text}`") };
    let mut key = Vec::new();
    if text.trim() == "1" {
        return Ok(key);
    }
    for tok in text.split_whitespace() {
        let body = tok.strip_prefix("s_").ok_or_else(bad)?;
        let (k, e) = match body.split_once('^') {
            Some((k, e)) => (k, e.parse::<usize>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let k: i64 = k.parse().map_err(|_| bad())?;
        key.extend(std::iter::repeat_n(k, e));
    }
    Ok(canonical(key))
}

impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{}", monomial_label(k))?;
        }
        Ok(())
    }
}

impl FromStr for TracePolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Self::zero();
        if s.trim() == "0" {
            return Ok(p);
        }
        for part in s.split(" + ") {
            let (c, m) = part.rsplit_once(")*").ok_or(Error::Parse { pos: 0, msg: format!("bad term `{part}`") })?;
            let c = c.strip_prefix('(').ok_or(Error::Parse { pos: 0, msg: format!("bad term `{part}`") })?;
            p.add_term(parse_monomial_label(m)?, &c.parse()?);
        }
        Ok(p)
    }
}

impl Add for &TracePolynomial {
    type Output = TracePolynomial;
    fn add(self, rhs: &TracePolynomial) -> TracePolynomial {
        let mut p = self.clone();
        for (k, c) in &rhs.terms {
            p.add_term(k.clone(), c);
        }
        p
    }
}

impl Add for TracePolynomial {
    type Output = TracePolynomial;
    fn add(self, rhs: TracePolynomial) -> TracePolynomial {
        &self + &rhs
    }
}

impl Neg for &TracePolynomial {
    type Output = TracePolynomial;
    fn neg(self) -> TracePolynomial {
        TracePolynomial { terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }
}

impl Neg for TracePolynomial {
    type Output = TracePolynomial;
    fn neg(self) -> TracePolynomial {
        -&self
    }
}

impl Sub for &TracePolynomial {
    type Output = TracePolynomial;
    fn sub(self, rhs: &TracePolynomial) -> TracePolynomial {
        self + &-rhs
    }
}

impl Sub for TracePolynomial {
    type Output = TracePolynomial;
    fn sub(self, rhs: TracePolynomial) -> TracePolynomial {
        &self - &rhs
    }
}

impl Mul for &TracePolynomial {
    type Output = TracePolynomial;
    fn mul(self, rhs: &TracePolynomial) -> TracePolynomial {
        self.product(rhs)
    }
}

/// The Markov trace rules: `tr(1) = 1`, `tr(a g_n) = z tr(a)`,
/// `tr(a t'_n^k) = s_k tr(a)`, with `z = -1/(u(1+u^2))`.
pub struct TraceRules;

impl ClosureRules for TraceRules {
    type Value = TracePolynomial;

    fn zero(&self) -> TracePolynomial {
        TracePolynomial::zero()
    }

    fn base(&self, k: i64) -> Result<TracePolynomial> {
        Ok(TracePolynomial::s(k))
    }

    fn free(&self, v: &TracePolynomial) -> TracePolynomial {
        v.clone()
    }

    fn stab(&self, v: &TracePolynomial) -> TracePolynomial {
        v.scale(&LocalizedCoeff::z())
    }

    fn outer(&self, k: i64, v: &TracePolynomial) -> Result<TracePolynomial> {
        Ok(v.times_s(k))
    }

    fn add_scaled(&self, acc: &mut TracePolynomial, c: &LaurentPoly, v: &TracePolynomial) -> Result<()> {
        *acc = &*acc + &v.scale_poly(c);
        Ok(())
    }
}

pub fn trace_element(e: &AlgebraElement) -> Result<TracePolynomial> {
    close(e, &TraceRules)
}

pub fn markov_trace(w: &MixedBraidWord) -> Result<TracePolynomial> {
    trace_element(&AlgebraElement::from_word(w)?)
}

/// `(-(1+u^2)/u)^(n-1) u^(2e)`, the normalization making the trace an invariant.
pub fn v_prefactor(strands: usize, exponent_sum: i64) -> LocalizedCoeff {
    let base = LocalizedCoeff::from_poly(LaurentPoly::from_terms(Var::U, [(-1, -1), (1, -1)]));
    let shift = LocalizedCoeff::from_poly(LaurentPoly::power(Var::U, 2 * exponent_sum));
    &base.pow(strands as u32 - 1) * &shift
}

#[allow(non_snake_case)]
pub fn invariant_V(w: &MixedBraidWord) -> Result<TracePolynomial> {
    Ok(markov_trace(w)?.scale(&v_prefactor(w.strands(), w.exponent_sum())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn tr(text: &str, n: usize) -> TracePolynomial {
        markov_trace(&parse_word(text, n).unwrap()).unwrap()
    }

    fn uc(terms: &[(i64, i64)], a: u32, b: u32) -> LocalizedCoeff {
        LocalizedCoeff::new(LaurentPoly::from_terms(Var::U, terms.iter().copied()), a, b)
    }

    #[test]
    fn golden_values() {
        assert_eq!(tr("s1", 2), TracePolynomial::constant(LocalizedCoeff::z()));
        assert_eq!(tr("", 1), TracePolynomial::one());
        assert_eq!(tr("t", 1), TracePolynomial::s(1));
        // tr(t_1) = (u^4+1)/(u^2(1+u^2)) s_1
        assert_eq!(tr("t1", 2), TracePolynomial::term(vec![1], uc(&[(0, 1), (4, 1)], 2, 1)));
        for n in 1..=4 {
            let text: Vec<String> = std::iter::once("t".to_string()).chain((1..=n).map(|i| format!("t{i}'"))).collect();
            assert_eq!(tr(&text.join(" "), n + 1), TracePolynomial::term(vec![1; n + 1], uc(&[(0, 1)], 0, 0)));
        }
    }

    #[test]
    fn t_sigma_pairs() {
        let z = LocalizedCoeff::z();
        assert_eq!(tr("t s1", 2), TracePolynomial::s(1).scale(&z));
        assert_eq!(tr("t^2 s1 t^3 s1^-1", 2), TracePolynomial::term(vec![2, 3], LocalizedCoeff::one(Var::U)));
        // tr(t^a t_1'^b g_1) = z s_(a+b)
        assert_eq!(tr("t^2 s1 t^3 s1^-1 s1", 2), TracePolynomial::s(5).scale(&z));
    }

    #[test]
    fn invariant_small() {
        assert_eq!(invariant_V(&parse_word("", 1).unwrap()).unwrap(), TracePolynomial::one());
        assert_eq!(invariant_V(&parse_word("s1", 2).unwrap()).unwrap(), TracePolynomial::one());
        assert_eq!(invariant_V(&parse_word("t", 1).unwrap()).unwrap(), TracePolynomial::s(1));
        // V(t_1 sigma_1) = (u^6+u^2-u^8) s_1
        let v = invariant_V(&parse_word("t1 s1", 2).unwrap()).unwrap();
        assert_eq!(v, TracePolynomial::term(vec![1], uc(&[(2, 1), (6, 1), (8, -1)], 0, 0)));
    }

    #[test]
    fn conjugation_invariance() {
        let base = tr("t s1 t^-1 s1 t^2", 2);
        assert_eq!(tr("s1 t s1 t^-1 s1 t^2 s1^-1", 2), base);
        assert_eq!(tr("t^-1 t s1 t^-1 s1 t^2 t", 2), base);
        let three = tr("t s2 s1 t s1 s2^-1 t", 3);
        assert_eq!(tr("s2^-1 t s2 s1 t s1 s2^-1 t s2", 3), three);
        assert_eq!(tr("s1 t s2 s1 t s1 s2^-1 t s1^-1", 3), three);
    }

    #[test]
    fn labels_round_trip() {
        for key in [vec![], vec![1], vec![1, 1, 3], vec![-2, 4]] {
            assert_eq!(parse_monomial_label(&monomial_label(&key)).unwrap(), key);
        }
    }
}

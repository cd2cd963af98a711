//! Combinations of the symbols `x_n that^m` and the recursion that removes
//! the `x_n`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::braid::compare_d;
use crate::coeff::{LaurentPoly, Var};

/// A symbol `x_n that^m`, ordered by `compare_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DSymbol {
    pub n: u32,
    pub m: u32,
}

impl Ord for DSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_d((self.n, self.m), (other.n, other.m))
    }
}

impl PartialOrd for DSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.n {
            0 => write!(f, "that^{}", self.m),
            n => write!(f, "x_{n} that^{}", self.m),
        }
    }
}

fn a(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Var::A, c, e)
}

/// Linear combination of `x_n that^m` with coefficients in `Z[A^±1]`.
/// `x_0 that^m` is `that^m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XExpression {
    terms: BTreeMap<DSymbol, LaurentPoly>,
}

impl XExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn symbol(n: u32, m: u32, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(DSymbol { n, m }, &c);
        e
    }

    pub fn add_term(&mut self, s: DSymbol, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(|| LaurentPoly::zero(Var::A));
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, largest symbol first.
    pub fn terms(&self) -> impl Iterator<Item = (DSymbol, &LaurentPoly)> + '_ {
        self.terms.iter().rev().map(|(s, c)| (*s, c))
    }

    pub fn coeff(&self, n: u32, m: u32) -> LaurentPoly {
        self.terms.get(&DSymbol { n, m }).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::A))
    }

    pub fn leading(&self) -> Option<(DSymbol, &LaurentPoly)> {
        self.terms.iter().next_back().map(|(s, c)| (*s, c))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (s, x) in &self.terms {
            out.add_term(*s, &(x * c));
        }
        out
    }

    /// True when no `x_n` with `n >= 1` is left.
    pub fn is_reduced(&self) -> bool {
        self.terms.keys().all(|s| s.n == 0)
    }

    /// Rewrites until only `that^m` symbols remain, always expanding the
    /// largest unreduced symbol.
    pub fn expand(&self) -> Self {
        let mut e = self.clone();
        while let Some((&s, _)) = e.terms.iter().rev().find(|(s, _)| s.n > 0) {
            let c = e.terms.remove(&s).unwrap();
            for (t, x) in descend(s) {
                e.add_term(t, &(&x * &c));
            }
        }
        e
    }
}

/// One rewriting step on `x_n that^m`, `n >= 1`:
/// `x_1 = that`, `x_2 = -A^4 that^2 - A^2` and
/// `x_n = -A^8 x_(n-2) - A^4 x_(n-1) that` for `n >= 3`.
///
/// Every symbol produced is strictly smaller under `compare_d`.
pub fn descend(s: DSymbol) -> Vec<(DSymbol, LaurentPoly)> {
    let DSymbol { n, m } = s;
    match n {
        0 => vec![(s, a(1, 0))],
        1 => vec![(DSymbol { n: 0, m: m + 1 }, a(1, 0))],
        2 => vec![(DSymbol { n: 0, m: m + 2 }, a(-1, 4)), (DSymbol { n: 0, m }, a(-1, 2))],
        _ => vec![(DSymbol { n: n - 2, m }, a(-1, 8)), (DSymbol { n: n - 1, m: m + 1 }, a(-1, 4))],
    }
}

/// `x_n` written in the powers of `that`.
///
/// `n = 0` gives `A^-6 that^0`, the value for which the recursion at `n = 2`
/// reproduces the base case `x_2 = -A^4 that^2 - A^2`, and for which
/// `bm(t^0) = A^6 x_0` is the identity.
pub fn xn_expand(n: u32) -> XExpression {
    if n == 0 {
        return XExpression::symbol(0, 0, a(1, -6));
    }
    XExpression::symbol(n, 0, a(1, 0)).expand()
}

impl fmt::Display for XExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn small_cases() {
        assert_eq!(xn_expand(1), XExpression::symbol(0, 1, a(1, 0)));
        let mut x2 = XExpression::symbol(0, 2, a(-1, 4));
        x2.add_term(DSymbol { n: 0, m: 0 }, &a(-1, 2));
        assert_eq!(xn_expand(2), x2);
        let mut x3 = XExpression::symbol(0, 3, a(1, 8));
        x3.add_term(DSymbol { n: 0, m: 1 }, &poly(&[(6, 1), (8, -1)]));
        assert_eq!(xn_expand(3), x3);
    }

    #[test]
    fn recursion_through_x0() {
        // -A^8 x_0 - A^4 x_1 that with x_0 = A^-6 is the stated x_2
        let mut via = xn_expand(0).scale(&a(-1, 8));
        via.add_term(DSymbol { n: 0, m: 2 }, &a(-1, 4));
        assert_eq!(via, xn_expand(2));
    }

    #[test]
    fn leading_terms_and_parity() {
        for n in 1..=10u32 {
            let e = xn_expand(n);
            let (s, c) = e.leading().unwrap();
            assert_eq!(s, DSymbol { n: 0, m: n });
            let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
            assert_eq!(*c, a(sign, 4 * n as i64 - 4), "n={n}");
            assert!(e.terms().all(|(s, _)| s.m % 2 == n % 2), "n={n}");
        }
    }

    #[test]
    fn display_order() {
        assert_eq!(xn_expand(2).to_string(), "(-A^4)that^2 + (-A^2)that^0");
    }
}

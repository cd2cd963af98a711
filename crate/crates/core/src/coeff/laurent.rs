use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The formal variable of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    U,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::U => "u",
        }
    }
}

/// Integer Laurent polynomial in a single variable.
///
/// Terms with zero coefficient are never stored, so structural equality is
/// value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c * var^e`
    pub fn monomial(var: Var, c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { var, terms }
    }

    /// `var^e`
    pub fn power(var: Var, e: i64) -> Self {
        Self::monomial(var, 1, e)
    }

    pub fn from_terms<I, C>(var: Var, it: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(var);
        for (e, c) in it {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading `(exponent, coefficient)`.
    pub fn lead(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Single-term polynomial as `(coefficient, exponent)`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            Err(Error::MixedVariable(self.var.name(), other.var.name()))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Nonnegative power.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        out
    }

    /// The involution `var -> var^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Maps every exponent through `f`, multiplying coefficients by `sign(e)`.
    /// Used by substitutions; `f` must be injective.
    pub(crate) fn remap(&self, var: Var, f: impl Fn(i64) -> (i64, bool)) -> Self {
        let mut out = Self::zero(var);
        for (e, c) in &self.terms {
            let (e2, negate) = f(*e);
            out.add_term(e2, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Same polynomial read in another variable.
    pub fn with_var(&self, var: Var) -> Self {
        LaurentPoly { var, terms: self.terms.clone() }
    }

    /// Exact division in the Laurent ring. `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() || self.var != divisor.var {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let dlead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        let lo = self.min_exp()? - dlo;
        while let Some((rhi, rc)) = rem.lead() {
            let qe = rhi - dhi;
            if qe < lo {
                return None;
            }
            let (q, r) = (rc / &dlead, rc % &dlead);
            if !r.is_zero() {
                return None;
            }
            let step = divisor.scale(&q).shift(qe);
            quot.add_term(qe, q);
            rem = &rem - &step;
        }
        Some(quot)
    }

    /// Strip the factor `var^k` with `k` the lowest exponent; returns `(k, rest)`.
    pub fn split_lowest(&self) -> (i64, Self) {
        match self.min_exp() {
            Some(k) => (k, self.shift(-k)),
            None => (0, self.clone()),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("mixed-variable addition")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        assert_eq!(self.var, rhs.var, "mixed-variable addition");
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("mixed-variable subtraction")
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("mixed-variable multiplication")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Canonical text form: ascending exponents, exponent always written,
/// unit coefficients shown as a bare sign, e.g. `-A^-2+3A^0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.name();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "{v}^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical form written by `Display`. Also accepts a bare
    /// integer (constant) and the variable without exponent.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
        }
        let var = if s.contains('u') { Var::U } else { Var::A };
        if s.contains('u') && s.contains('A') {
            return Err(Error::MixedVariable("A", "u"));
        }
        let vch = var.name().chars().next().unwrap();
        let bytes: Vec<char> = s.chars().collect();
        let mut p = LaurentPoly::zero(var);
        let mut i = 0;
        let bad = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(bad(i, "expected sign"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                bytes[start..i].iter().collect::<String>().parse::<BigInt>().unwrap()
            } else {
                BigInt::one()
            };
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == vch {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < bytes.len() && bytes[i] == '-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = bytes[es..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| bad(es, "malformed exponent"))?;
                }
            } else if i == start {
                return Err(bad(i, "expected coefficient or variable"));
            }
            p.add_term(exp, sign * coeff);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let p = a(&[(0, 1), (2, 1)]) * a(&[(0, 1), (2, -1)]);
        assert_eq!(p, a(&[(0, 1), (4, -1)]));
    }

    #[test]
    fn d_squared() {
        let d = LaurentPoly::from_terms(Var::U, [(1, 1), (-1, -1)]);
        assert_eq!(&d * &d, LaurentPoly::from_terms(Var::U, [(2, 1), (0, -2), (-2, 1)]));
    }

    #[test]
    fn mixed_variables_refused() {
        let p = LaurentPoly::one(Var::A);
        let q = LaurentPoly::one(Var::U);
        assert!(matches!(p.try_add(&q), Err(Error::MixedVariable(..))));
        assert!(p.try_mul(&q).is_err());
    }

    #[test]
    fn display_and_parse() {
        let p = a(&[(-2, -1), (0, 3), (4, 1)]);
        assert_eq!(p.to_string(), "-A^-2+3A^0+A^4");
        assert_eq!("-A^-2+3A^0+A^4".parse::<LaurentPoly>().unwrap(), p);
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero(Var::A));
        assert!("A^x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let c = a(&[(0, 1), (4, 1)]);
        let p = &c * &a(&[(-3, 2), (1, -5)]);
        assert_eq!(p.div_exact(&c).unwrap(), a(&[(-3, 2), (1, -5)]));
        assert!(a(&[(0, 1), (2, 1)]).div_exact(&c).is_none());
        assert!(a(&[(0, 1)]).div_exact(&a(&[(0, 2)])).is_none());
    }
}

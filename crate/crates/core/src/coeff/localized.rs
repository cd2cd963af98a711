use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use super::laurent::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// Element of the localization of `Z[v^±1]` at `v^a c^b`, where
/// `c = 1 + u^2` for `v = u` and `c = 1 + A^4` for `v = A`.
///
/// Stored as `numerator / (v^a c^b)` in normal form: the numerator has no
/// negative exponents, it is not divisible by `v` when `a > 0`, and not
/// divisible by `c` when `b > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalizedCoeff {
    numerator: LaurentPoly,
    denom_pow: u32,
    cyclo_pow: u32,
}

/// The localizing factor `c` for a variable.
pub fn cyclo(var: Var) -> LaurentPoly {
    match var {
        Var::U => LaurentPoly::from_terms(var, [(0, 1), (2, 1)]),
        Var::A => LaurentPoly::from_terms(var, [(0, 1), (4, 1)]),
    }
}

impl LocalizedCoeff {
    /// Builds and normalizes.
    pub fn new(numerator: LaurentPoly, denom_pow: u32, cyclo_pow: u32) -> Self {
        let mut c = Self::unnormalized(numerator, denom_pow, cyclo_pow);
        c.normalize();
        c
    }

    /// Builds without normalizing. Only useful for testing equivalence.
    pub fn unnormalized(numerator: LaurentPoly, denom_pow: u32, cyclo_pow: u32) -> Self {
        LocalizedCoeff { numerator, denom_pow, cyclo_pow }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, 0, 0)
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(LaurentPoly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        Self::from_poly(LaurentPoly::one(var))
    }

    /// `z = -1/(u(1+u^2))`.
    pub fn z() -> Self {
        Self::new(LaurentPoly::constant(Var::U, -1), 1, 1)
    }

    pub fn var(&self) -> Var {
        self.numerator.var()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denom_pow(&self) -> u32 {
        self.denom_pow
    }

    pub fn cyclo_pow(&self) -> u32 {
        self.cyclo_pow
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn normalize(&mut self) {
        if self.numerator.is_zero() {
            self.denom_pow = 0;
            self.cyclo_pow = 0;
            return;
        }
        let c = cyclo(self.var());
        while self.cyclo_pow > 0 {
            match self.numerator.div_exact(&c) {
                Some(q) => {
                    self.numerator = q;
                    self.cyclo_pow -= 1;
                }
                None => break,
            }
        }
        // numerator * v^-a = rest * v^(low - a)
        let (low, rest) = self.numerator.split_lowest();
        let net = low - self.denom_pow as i64;
        if net >= 0 {
            self.numerator = rest.shift(net);
            self.denom_pow = 0;
        } else {
            self.numerator = rest;
            self.denom_pow = (-net) as u32;
        }
    }

    /// Cross-multiplication equality; valid for unnormalized values.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.var() != other.var() {
            return false;
        }
        let c = cyclo(self.var());
        let lhs = &self.numerator.shift(other.denom_pow as i64) * &c.pow(other.cyclo_pow);
        let rhs = &other.numerator.shift(self.denom_pow as i64) * &c.pow(self.cyclo_pow);
        lhs == rhs
    }

    /// Value as a Laurent polynomial, if the `c` part of the denominator is trivial.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        let mut n = self.clone();
        n.normalize();
        if n.cyclo_pow == 0 {
            Some(n.numerator.shift(-(n.denom_pow as i64)))
        } else {
            None
        }
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::new(self.numerator.scale(k), self.denom_pow, self.cyclo_pow)
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        Self::new(&self.numerator * p, self.denom_pow, self.cyclo_pow)
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(self.numerator.pow(n), self.denom_pow * n, self.cyclo_pow * n)
    }

    /// Exact division by a polynomial, when the quotient stays in the localization.
    pub fn div_poly(&self, p: &LaurentPoly) -> Option<Self> {
        let c = cyclo(self.var());
        let (low, mut rest) = p.split_lowest();
        let mut b = 0u32;
        while let Some(q) = rest.div_exact(&c) {
            rest = q;
            b += 1;
        }
        let q = self.numerator.div_exact(&rest)?;
        Some(Self::new(q.shift(-low), self.denom_pow, self.cyclo_pow + b))
    }
}

// a common denominator needs products
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for &LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn add(self, rhs: &LocalizedCoeff) -> LocalizedCoeff {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let c = cyclo(self.var());
        let a = self.denom_pow.max(rhs.denom_pow);
        let b = self.cyclo_pow.max(rhs.cyclo_pow);
        let lift = |x: &LocalizedCoeff| {
            &x.numerator.shift((a - x.denom_pow) as i64) * &c.pow(b - x.cyclo_pow)
        };
        LocalizedCoeff::new(&lift(self) + &lift(rhs), a, b)
    }
}

impl Add for LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn add(self, rhs: LocalizedCoeff) -> LocalizedCoeff {
        &self + &rhs
    }
}

impl Neg for &LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn neg(self) -> LocalizedCoeff {
        LocalizedCoeff { numerator: -&self.numerator, ..self.clone() }
    }
}

impl Neg for LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn neg(self) -> LocalizedCoeff {
        -&self
    }
}

impl Sub for &LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn sub(self, rhs: &LocalizedCoeff) -> LocalizedCoeff {
        self + &-rhs
    }
}

impl Sub for LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn sub(self, rhs: LocalizedCoeff) -> LocalizedCoeff {
        &self - &rhs
    }
}

impl Mul for &LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn mul(self, rhs: &LocalizedCoeff) -> LocalizedCoeff {
        LocalizedCoeff::new(
            &self.numerator * &rhs.numerator,
            self.denom_pow + rhs.denom_pow,
            self.cyclo_pow + rhs.cyclo_pow,
        )
    }
}

impl Mul for LocalizedCoeff {
    type Output = LocalizedCoeff;
    fn mul(self, rhs: LocalizedCoeff) -> LocalizedCoeff {
        &self * &rhs
    }
}

/// `(num)/(v^a(1+v^2)^b)`; plain polynomial form when there is no denominator.
impl fmt::Display for LocalizedCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom_pow == 0 && self.cyclo_pow == 0 {
            return write!(f, "{}", self.numerator);
        }
        let v = self.var().name();
        write!(f, "({})/(", self.numerator)?;
        let mut parts = Vec::new();
        if self.denom_pow > 0 {
            parts.push(format!("{v}^{}", self.denom_pow));
        }
        if self.cyclo_pow > 0 {
            parts.push(format!("({})^{}", cyclo(self.var()), self.cyclo_pow));
        }
        write!(f, "{})", parts.join("*"))
    }
}

/// Parses the `Display` form back.
impl FromStr for LocalizedCoeff {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse { pos: 0, msg: format!("bad localized coefficient `{s}`") };
        let Some((num, den)) = s.split_once(")/(") else {
            let p: LaurentPoly = s.parse()?;
            let var = if s.contains('A') { Var::A } else { Var::U };
            return Ok(Self::from_poly(p.with_var(var)));
        };
        let numerator: LaurentPoly = num.strip_prefix('(').ok_or_else(bad)?.parse()?;
        let den = den.strip_suffix(')').ok_or_else(bad)?;
        let (mut a, mut b) = (0u32, 0u32);
        for part in den.split('*') {
            let (base, e) = part.rsplit_once('^').ok_or_else(bad)?;
            let e: u32 = e.parse().map_err(|_| bad())?;
            if base.starts_with('(') {
                b = e;
            } else {
                a = e;
            }
        }
        // a constant numerator carries no variable; read it off the denominator
        let var = if den.contains('A') { Var::A } else { Var::U };
        Ok(Self::new(numerator.with_var(var), a, b))
    }
}

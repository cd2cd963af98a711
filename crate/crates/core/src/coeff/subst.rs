use std::fmt;
use std::str::FromStr;

use super::laurent::{LaurentPoly, Var};
use super::localized::LocalizedCoeff;
use crate::error::{Error, Result};

/// Map from the Hecke variable `u` to the bracket variable `A`.
///
/// Both choices satisfy `u - u^-1 = A^2 - A^-2` up to sign conventions
/// on the crossing rescaling `sigma = A (A + A^-1 e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Substitution {
    /// `u -> A^2`
    #[default]
    Square,
    /// `u -> -A^-2`
    NegInvSquare,
}

impl Substitution {
    pub fn label(self) -> &'static str {
        match self {
            Substitution::Square => "u=A2",
            Substitution::NegInvSquare => "u=-A-2",
        }
    }

    /// Image of `u^k`: `(exponent of A, negate?)`.
    fn image(self, k: i64) -> (i64, bool) {
        match self {
            Substitution::Square => (2 * k, false),
            Substitution::NegInvSquare => (-2 * k, k.rem_euclid(2) == 1),
        }
    }

    /// Ring homomorphism `Z[u^±1] -> Z[A^±1]`.
    pub fn apply(self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if p.var() != Var::U {
            return Err(Error::MixedVariable("u", p.var().name()));
        }
        Ok(p.remap(Var::A, |k| self.image(k)))
    }

    /// Image of a localized coefficient. The denominator `u^a(1+u^2)^b`
    /// maps into the `A`-localization at `A^a'(1+A^4)^b`.
    pub fn apply_localized(self, c: &LocalizedCoeff) -> Result<LocalizedCoeff> {
        let num = self.apply(c.numerator())?;
        let a = c.denom_pow() as i64;
        let b = c.cyclo_pow();
        Ok(match self {
            Substitution::Square => LocalizedCoeff::new(num, 2 * a as u32, b),
            Substitution::NegInvSquare => {
                // u^a -> (-1)^a A^-2a ; 1+u^2 -> A^-4 (1+A^4)
                let sign = if a % 2 == 1 { -1 } else { 1 };
                let fixed = num.shift(2 * a + 4 * b as i64).scale(&sign.into());
                LocalizedCoeff::new(fixed, 0, b)
            }
        })
    }

    /// Inverse on the image: `A^(2k)` back to a power of `u`. Odd powers of `A`
    /// are not in the image.
    pub fn pull_back(self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if p.var() != Var::A {
            return Err(Error::MixedVariable("A", p.var().name()));
        }
        if let Some((e, _)) = p.terms().find(|(e, _)| e % 2 != 0) {
            return Err(Error::Unsupported(format!("odd power A^{e} has no preimage in u")));
        }
        Ok(match self {
            Substitution::Square => p.remap(Var::U, |e| (e / 2, false)),
            Substitution::NegInvSquare => p.remap(Var::U, |e| (-e / 2, (e / 2).rem_euclid(2) == 1)),
        })
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Substitution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "u=A2" | "u=A^2" => Ok(Substitution::Square),
            "u=-A-2" | "u=-A^-2" => Ok(Substitution::NegInvSquare),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown substitution `{s}`") }),
        }
    }
}

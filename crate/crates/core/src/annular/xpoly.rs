//! The skein algebra of the solid torus as `Z[A^±1][x]`, where `x` is one
//! longitude and the empty diagram is `1`. Used to write mirror images of
//! basis curves back in the basis `t^n`.

use std::collections::BTreeMap;

use super::skein::{delta, SkeinVector};
use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    terms: BTreeMap<u32, LaurentPoly>,
}

fn a(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Var::A, c, e)
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, LaurentPoly)>) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, &c);
        }
        p
    }

    pub fn add_term(&mut self, k: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(|| LaurentPoly::zero(Var::A));
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: u32) -> LaurentPoly {
        self.terms.get(&k).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::A))
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (k, c) in &other.terms {
            p.add_term(*k, c);
        }
        p
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, x)| (*k, x * c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (k, x) in &self.terms {
            for (m, y) in &other.terms {
                p.add_term(k + m, &(x * y));
            }
        }
        p
    }

    /// Multiply by `x`.
    pub fn times_x(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k + 1, c.clone())))
    }

    /// Coefficientwise `A -> A^-1`; the image of the mirror reflection,
    /// since a longitude is its own mirror image.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.bar())))
    }

    /// The curve `t^n`: `t^0 = delta`, `t = x`, `t^(n+1) = -A^2 x t^n - A^4 t^(n-1)`.
    pub fn basis(n: u32) -> Self {
        let mut prev = Self::from_terms([(0, delta())]);
        if n == 0 {
            return prev;
        }
        let mut cur = Self::from_terms([(1, LaurentPoly::one(Var::A))]);
        for _ in 1..n {
            let next = cur.times_x().scale(&a(-1, 2)).add(&prev.scale(&a(-1, 4)));
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn from_skein(v: &SkeinVector) -> Self {
        let mut p = Self::zero();
        for (n, c) in v.terms() {
            p = p.add(&Self::basis(n).scale(c));
        }
        p
    }

    /// Triangular change of basis back to `t^n`. The leading coefficient of
    /// `t^d` is `(-A^2)^(d-1)`, a unit; the constant term must be a multiple
    /// of `delta` to be a multiple of the affine unknot.
    pub fn to_skein(&self) -> Result<SkeinVector> {
        let mut rest = self.clone();
        let mut out = SkeinVector::zero();
        while let Some((&d, c)) = rest.terms.iter().next_back() {
            let c = c.clone();
            if d == 0 {
                let q = c.div_exact(&delta()).ok_or_else(|| {
                    Error::Internal(format!("constant term {c} is not a multiple of the loop value"))
                })?;
                out.add_term(0, &q);
                break;
            }
            let lead = a(if (d - 1) % 2 == 0 { 1 } else { -1 }, 2 * (d as i64 - 1));
            let q = c.div_exact(&lead).expect("unit leading coefficient");
            out.add_term(d, &q);
            rest = rest.add(&Self::basis(d).scale(&-q));
        }
        Ok(out)
    }
}

impl SkeinVector {
    /// Image under reflection of the solid torus (mirror image).
    pub fn mirror(&self) -> Self {
        XPoly::from_skein(self).bar().to_skein().expect("mirror of a basis combination")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annular::skein::merge;

    #[test]
    fn low_basis_curves() {
        let t2 = XPoly::from_terms([(2, a(-1, 2)), (0, a(1, 6) + a(1, 2))]);
        assert_eq!(XPoly::basis(2), t2);
        let t3 = XPoly::from_terms([(3, a(1, 4)), (1, a(-1, 8) + a(-2, 4))]);
        assert_eq!(XPoly::basis(3), t3);
    }

    #[test]
    fn merge_rule_matches_polynomial_product() {
        for k in 0..=8 {
            for m in 0..=8 {
                let lhs = XPoly::basis(k).mul(&XPoly::basis(m));
                assert_eq!(lhs, XPoly::from_skein(&merge(k, m)), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn round_trip() {
        for n in 0..8 {
            assert_eq!(XPoly::from_skein(&SkeinVector::basis(n)).to_skein().unwrap(), SkeinVector::basis(n));
        }
    }

    #[test]
    fn mirror_is_involution() {
        for n in 0..7 {
            let v = SkeinVector::basis(n);
            assert_eq!(v.mirror().mirror(), v);
        }
        assert_eq!(SkeinVector::basis(1).mirror(), SkeinVector::basis(1));
    }
}

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use crate::coeff::{LaurentPoly, Var};

/// Finite combination of the basis curves `t^n` of the solid torus with
/// coefficients in `Z[A^±1]`. `t^0` is the affine unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SkeinVector {
    terms: BTreeMap<u32, LaurentPoly>,
}

/// Loop value `-A^2 - A^-2`.
pub fn delta() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(2, -1), (-2, -1)])
}

fn a(c: i64, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(Var::A, c, e)
}

impl SkeinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1 * t^n`
    pub fn basis(n: u32) -> Self {
        Self::term(n, LaurentPoly::one(Var::A))
    }

    pub fn term(n: u32, c: LaurentPoly) -> Self {
        let mut v = Self::zero();
        v.add_term(n, &c);
        v
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, LaurentPoly)>) -> Self {
        let mut v = Self::zero();
        for (n, c) in it {
            v.add_term(n, &c);
        }
        v
    }

    pub fn add_term(&mut self, n: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        assert_eq!(c.var(), Var::A, "skein coefficients live in Z[A^±1]");
        let slot = self.terms.entry(n).or_insert_with(|| LaurentPoly::zero(Var::A));
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, n: u32) -> LaurentPoly {
        self.terms.get(&n).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::A))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &LaurentPoly)> + '_ {
        self.terms.iter().map(|(n, c)| (*n, c))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, x)| (*n, x * c)))
    }

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, x)| (*n, x.shift(k))))
    }

    /// Product in the skein algebra of the solid torus (stacking).
    pub fn product(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            for (m, y) in &other.terms {
                let xy = x * y;
                for (n, c) in merge(*k, *m).terms() {
                    out.add_term(n, &(&xy * c));
                }
            }
        }
        out
    }

    /// `self / c` when every coefficient is divisible by `c`.
    pub fn div_exact(&self, c: &LaurentPoly) -> Option<Self> {
        let mut out = Self::zero();
        for (n, x) in &self.terms {
            out.add_term(*n, &x.div_exact(c)?);
        }
        Some(out)
    }

    /// If `self = c * other` for a single monomial `c = ±A^k`, returns it.
    pub fn monomial_ratio(&self, other: &Self) -> Option<LaurentPoly> {
        let (n, x) = self.terms.iter().next()?;
        let q = x.div_exact(other.terms.get(n)?)?;
        let (c, _) = q.as_monomial()?;
        if !(c == &1.into() || c == &(-1).into()) {
            return None;
        }
        (&other.scale(&q) == self).then_some(q)
    }
}

/// `t^k * t^m` expanded in the basis.
///
/// `t^k t^0 = delta t^k`, `t^k t = -A^-2 t^(k+1) - A^2 t^(k-1)` and for
/// `k >= m >= 2`: `t^k t^m = -A^-2 t^(k+m) + A^6 t^(k+m-2) + A^4 t^(k-1) t^(m-1)`.
pub fn merge(k: u32, m: u32) -> SkeinVector {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), SkeinVector>>> = OnceLock::new();
    let (k, m) = if k >= m { (k, m) } else { (m, k) };
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(k, m)) {
        return v.clone();
    }
    let v = match m {
        0 => SkeinVector::term(k, delta()),
        1 => {
            let mut v = SkeinVector::term(k + 1, a(-1, -2));
            v.add_term(k - 1, &a(-1, 2));
            v
        }
        _ => {
            let mut v = SkeinVector::term(k + m, a(-1, -2));
            v.add_term(k + m - 2, &a(1, 6));
            v + merge(k - 1, m - 1).scale(&a(1, 4))
        }
    };
    cache.lock().unwrap().insert((k, m), v.clone());
    v
}

impl Add for SkeinVector {
    type Output = SkeinVector;
    fn add(mut self, rhs: SkeinVector) -> SkeinVector {
        for (n, c) in &rhs.terms {
            self.add_term(*n, c);
        }
        self
    }
}

impl Add for &SkeinVector {
    type Output = SkeinVector;
    fn add(self, rhs: &SkeinVector) -> SkeinVector {
        self.clone() + rhs.clone()
    }
}

impl Neg for SkeinVector {
    type Output = SkeinVector;
    fn neg(self) -> SkeinVector {
        SkeinVector { terms: self.terms.into_iter().map(|(n, c)| (n, -c)).collect() }
    }
}

impl Sub for SkeinVector {
    type Output = SkeinVector;
    fn sub(self, rhs: SkeinVector) -> SkeinVector {
        self + (-rhs)
    }
}

impl Sub for &SkeinVector {
    type Output = SkeinVector;
    fn sub(self, rhs: &SkeinVector) -> SkeinVector {
        self.clone() - rhs.clone()
    }
}

impl Mul for &SkeinVector {
    type Output = SkeinVector;
    fn mul(self, rhs: &SkeinVector) -> SkeinVector {
        self.product(rhs)
    }
}

/// Descending degree, e.g. `(-A^-2)t^2 + (-A^2)t^0`.
impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (n, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})t^{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_parallel_longitudes() {
        let v = merge(1, 1);
        assert_eq!(v, SkeinVector::from_terms([(2, a(-1, -2)), (0, a(-1, 2))]));
    }

    #[test]
    fn unknot_factor() {
        assert_eq!(merge(3, 0), SkeinVector::term(3, delta()));
        assert_eq!(merge(0, 0), SkeinVector::term(0, delta()));
    }

    #[test]
    fn commutative() {
        for k in 0..5 {
            for m in 0..5 {
                let x = SkeinVector::basis(k).product(&SkeinVector::basis(m));
                let y = SkeinVector::basis(m).product(&SkeinVector::basis(k));
                assert_eq!(x, y);
            }
        }
    }

    #[test]
    fn monomial_ratio_detects_scaling() {
        let v = merge(2, 1);
        let w = v.scale(&a(-1, 6));
        assert_eq!(w.monomial_ratio(&v), Some(a(-1, 6)));
        assert_eq!(v.monomial_ratio(&merge(1, 1)), None);
    }
}

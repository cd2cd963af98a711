//! Closure of basis monomials by induction on the number of strands.
//!
//! The top factor of a monomial on `n` strands is `t'_{n-1}^k g_{n-1} .. g_i`.
//! With no crossings the last strand is either empty (`free`) or carries a
//! loop (`outer`). Otherwise `t'_{n-1}^k g_{n-1} = g_{n-1} t'_{n-2}^k`, the
//! crossing is moved to the end by cyclicity and removed by a Markov
//! stabilization (`stab`).

use std::collections::HashMap;

use super::element::{AlgebraElement, Monomial};
use crate::coeff::{LaurentPoly, Var};
use crate::error::Result;

/// What the closure recursion produces at each step.
pub trait ClosureRules {
    type Value: Clone;
    fn zero(&self) -> Self::Value;
    /// Closure of `t^k` on one strand.
    fn base(&self, k: i64) -> Result<Self::Value>;
    /// An extra strand with nothing on it.
    fn free(&self, v: &Self::Value) -> Self::Value;
    /// Removal of one positive crossing `g_n`.
    fn stab(&self, v: &Self::Value) -> Self::Value;
    /// An extra strand carrying `t'_n^k`.
    fn outer(&self, k: i64, v: &Self::Value) -> Result<Self::Value>;
    fn add_scaled(&self, acc: &mut Self::Value, c: &LaurentPoly, v: &Self::Value) -> Result<()>;
}

struct Closer<'r, R: ClosureRules> {
    rules: &'r R,
    memo: HashMap<Monomial, R::Value>,
}

pub fn close<R: ClosureRules>(e: &AlgebraElement, rules: &R) -> Result<R::Value> {
    let mut c = Closer { rules, memo: HashMap::new() };
    c.close_element(e)
}

impl<R: ClosureRules> Closer<'_, R> {
    fn close_element(&mut self, e: &AlgebraElement) -> Result<R::Value> {
        let mut acc = self.rules.zero();
        for (m, c) in e.terms() {
            let v = self.close_mono(m)?;
            self.rules.add_scaled(&mut acc, c, &v)?;
        }
        Ok(acc)
    }

    fn close_mono(&mut self, m: &Monomial) -> Result<R::Value> {
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        let v = self.close_uncached(m)?;
        self.memo.insert(m.clone(), v.clone());
        Ok(v)
    }

    fn close_uncached(&mut self, m: &Monomial) -> Result<R::Value> {
        let f = m.factors();
        let n = f.len();
        let top = f[n - 1];
        if n == 1 {
            return self.rules.base(top.k);
        }
        let rest = Monomial::from_factors(f[..n - 1].to_vec());
        if top.i == n {
            let v = self.close_mono(&rest)?;
            return if top.k == 0 { Ok(self.rules.free(&v)) } else { self.rules.outer(top.k, &v) };
        }
        let mut x = AlgebraElement::monomial(rest, LaurentPoly::one(Var::U));
        if top.k != 0 {
            x = x.mul_loop(n - 2, top.k)?;
        }
        for j in (top.i..n - 1).rev() {
            x = x.mul_g(j, 1)?;
        }
        let v = self.close_element(&x)?;
        Ok(self.rules.stab(&v))
    }
}

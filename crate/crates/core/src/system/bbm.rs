//! The braid band move system on the invariant `V`:
//! `V(t^n) = V(t_1^n sigma_1^±1)`.
//!
//! The trace treats `s_a s_b` as a new symbol, but in the skein module of the
//! solid torus two stacked curves are a combination of single curves. To
//! solve the system the trace values are first collapsed onto the `s_n`
//! alone ([`collapse`]), which needs a choice of `u` in terms of `A`.

use std::collections::{BTreeMap, BTreeSet};

use crate::annular::{closure_curve, delta, SkeinVector};
use crate::braid::{parse_word, MixedBraidWord};
use crate::coeff::{LaurentPoly, LocalizedCoeff, Substitution, Var};
use crate::error::{Error, Result};
use crate::tl::{invariant_V, TracePolynomial};

/// `t_1^n sigma_1^sign` on two strands.
pub fn bbm_word(n: u32, sign: i8) -> Result<MixedBraidWord> {
    let s = if sign > 0 { "s1" } else { "s1^-1" };
    if n == 0 {
        return parse_word(s, 2);
    }
    parse_word(&format!("t1^{n} {s}"), 2)
}

/// `V(t^n) - V(t_1^n sigma_1^sign)`; the equation is that this vanishes.
pub fn bbm_equation_for(n: u32, sign: i8) -> Result<TracePolynomial> {
    let source = if n == 0 { parse_word("", 1)? } else { parse_word(&format!("t^{n}"), 1)? };
    Ok(&invariant_V(&source)? - &invariant_V(&bbm_word(n, sign)?)?)
}

/// Coordinates in the basis of closures `c_n` of `t^n` (`c_n` is the mirror
/// of the basis curve `t^n`, see [`closure_curve`]).
pub fn closure_coordinates(v: &SkeinVector) -> SkeinVector {
    let m = v.mirror();
    SkeinVector::from_terms(m.terms().map(|(n, c)| (n, c.bar())))
}

fn pulled(p: &LaurentPoly, sub: Substitution) -> Result<LocalizedCoeff> {
    Ok(LocalizedCoeff::from_poly(sub.pull_back(p)?))
}

/// `1/delta` in the localization of `Z[u^±1]`.
fn inverse_delta(sub: Substitution) -> Result<LocalizedCoeff> {
    // delta pulls back to ±(u + u^-1) = ±(1+u^2)/u
    let sign = sub.pull_back(&delta())?.coeff(1);
    Ok(LocalizedCoeff::new(LaurentPoly::monomial(Var::U, sign, 1), 0, 1))
}

/// Trace values with products of `s_k` replaced by combinations of single
/// `s_n`: a monomial `s_k1 .. s_kr` is the normalized bracket of `r` stacked
/// curves `c_k1 .. c_kr`, divided by `delta^(r-1)`.
///
/// The result agrees with the normalized state sum only for
/// `u -> -A^-2`, the substitution under which `z = -1/(u(1+u^2))` is the
/// value of a positive curl on an extra strand.
pub fn collapse(p: &TracePolynomial, sub: Substitution) -> Result<TracePolynomial> {
    let inv = inverse_delta(sub)?;
    let mut out = TracePolynomial::zero();
    for (key, c) in p.terms() {
        // a lone s_-k is the basis curve t^k, which is not a single c_n
        if key.is_empty() || (key.len() == 1 && key[0] > 0) {
            out.add_term(key.to_vec(), c);
            continue;
        }
        let mut curves = closure_curve(key[0]);
        for &k in &key[1..] {
            curves = curves.product(&closure_curve(k));
        }
        let scale = c * &inv.pow(key.len() as u32 - 1);
        for (n, y) in closure_coordinates(&curves).terms() {
            out.add_term(vec![n as i64], &(&scale * &pulled(y, sub)?));
        }
    }
    Ok(out)
}

/// `q s_n = p s_base` after elimination; `base` is `0` or `1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub n: u32,
    pub q: LocalizedCoeff,
    pub p: LocalizedCoeff,
    pub base: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    /// Collapsed equations, `n = 2..=N`.
    pub equations: Vec<(u32, TracePolynomial)>,
    pub solved: Vec<Solved>,
    /// Symbols `s_k` still free after elimination.
    pub remaining: BTreeSet<u32>,
}

fn index_of_key(key: &[i64]) -> Result<u32> {
    match key {
        [] => Ok(0),
        [k] if *k > 0 => Ok(*k as u32),
        _ => Err(Error::Internal(format!("collapsed trace has a non-linear term {key:?}"))),
    }
}

/// Triangular elimination of `s_2 .. s_N` with the `sign` equations.
pub fn eliminate(n_max: u32, sign: i8, sub: Substitution) -> Result<Elimination> {
    let one = LocalizedCoeff::one(Var::U);
    let mut solved: BTreeMap<u32, Solved> = BTreeMap::new();
    let mut equations = Vec::new();
    let mut remaining = BTreeSet::new();
    for n in 2..=n_max {
        let eq = collapse(&bbm_equation_for(n, sign)?, sub)?;
        let mut coeffs: BTreeMap<u32, LocalizedCoeff> = BTreeMap::new();
        for (key, c) in eq.terms() {
            coeffs.insert(index_of_key(key)?, c.clone());
        }
        equations.push((n, eq));
        if coeffs.keys().any(|&k| k > n || k % 2 != n % 2) {
            return Err(Error::Internal(format!("equation {n} leaves its parity class or degree: {coeffs:?}")));
        }
        let Some(lead) = coeffs.remove(&n) else {
            remaining.insert(n);
            continue;
        };
        let base = n % 2;
        // q_k s_k = p_k s_base for every lower k in the support
        let lower: Vec<(LocalizedCoeff, LocalizedCoeff, LocalizedCoeff)> = coeffs
            .iter()
            .map(|(k, e)| match solved.get(k) {
                Some(s) => (e.clone(), s.q.clone(), s.p.clone()),
                None => (e.clone(), one.clone(), one.clone()),
            })
            .collect();
        for k in coeffs.keys().filter(|&&k| k >= 2 && !solved.contains_key(&k)) {
            remaining.insert(*k);
        }
        let mut q = lead;
        for (_, qk, _) in &lower {
            q = &q * qk;
        }
        let mut p = LocalizedCoeff::zero(Var::U);
        for (i, (e, _, pk)) in lower.iter().enumerate() {
            let mut term = e * pk;
            for (j, (_, qj, _)) in lower.iter().enumerate() {
                if i != j {
                    term = &term * qj;
                }
            }
            p = &p - &term;
        }
        solved.insert(n, Solved { n, q, p, base });
    }
    remaining.extend([0, 1]);
    Ok(Elimination { equations, solved: solved.into_values().collect(), remaining })
}

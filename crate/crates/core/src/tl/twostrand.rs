//! The one hard commutation in `H_{1,2}`: moving `t` to the left of `t'_1^k`.
//!
//! With `T = t`, `g = g_1`, `X = g T g` (the plain loop `t_1`, which commutes
//! with `T`) and `P = g T g^-1` (the primed loop `t'_1`), products are easy in
//! the plain basis `T^a X^b g^e` and the sorted primed basis `T^a P^b g^e` is
//! reached by a triangular change of basis in `|b|`, whose diagonal blocks
//! have determinant one.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::coeff::{LaurentPoly, Var};

/// `d = u - u^-1`, the linear coefficient of the quadratic relation.
pub fn d() -> LaurentPoly {
    LaurentPoly::from_terms(Var::U, [(1, 1), (-1, -1)])
}

fn one() -> LaurentPoly {
    LaurentPoly::one(Var::U)
}

/// `(a, b, e)` stands for `T^a X^b g^e` or `T^a P^b g^e`, `e` in `{0, 1}`.
type Key = (i64, i64, u8);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Sum(BTreeMap<Key, LaurentPoly>);

impl Sum {
    fn add(&mut self, k: Key, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(k).or_insert_with(|| LaurentPoly::zero(Var::U));
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&k);
        }
    }

    fn add_sum(&mut self, other: &Sum, c: &LaurentPoly) {
        for (k, x) in &other.0 {
            self.add(*k, &(x * c));
        }
    }
}

/// `P^b` in the plain basis.
///
/// `b > 0`: `X^b + d^2 sum T^(b-i) X^i - d sum T^(b-i) X^i g`, `1 <= i <= b`.
/// `b < 0`, `b = -c`: `X^-c + d sum X^-i T^-(c-i) g - d^2 sum X^-i T^-(c-i)`, `0 <= i < c`.
fn plain_power(b: i64) -> Sum {
    let mut s = Sum::default();
    let dd = d();
    let d2 = &dd * &dd;
    if b >= 0 {
        s.add((0, b, 0), &one());
        for i in 1..=b {
            s.add((b - i, i, 0), &d2);
            s.add((b - i, i, 1), &-&dd);
        }
    } else {
        let c = -b;
        s.add((0, b, 0), &one());
        for i in 0..c {
            s.add((-(c - i), -i, 1), &dd);
            s.add((-(c - i), -i, 0), &-&d2);
        }
    }
    s
}

/// Plain image of the primed basis element `T^a P^b g^e`.
fn plain_of_primed((a, b, e): Key) -> Sum {
    let mut s = Sum::default();
    for ((a1, b1, e1), c) in plain_power(b).0 {
        s.add((a + a1, b1, e1), &c);
    }
    if e == 1 {
        s = times_g(&s);
    }
    s
}

fn times_g(s: &Sum) -> Sum {
    let mut out = Sum::default();
    for (&(a, b, e), c) in &s.0 {
        if e == 0 {
            out.add((a, b, 1), c);
        } else {
            out.add((a, b, 1), &(c * &d()));
            out.add((a, b, 0), c);
        }
    }
    out
}

/// Right multiplication by `T^s`, `s = ±1`, using `g T = X g - d X` and
/// `g T^-1 = X^-1 g + d T^-1`.
fn times_t(s: &Sum, sign: i64) -> Sum {
    let mut out = Sum::default();
    for (&(a, b, e), c) in &s.0 {
        if e == 0 {
            out.add((a + sign, b, 0), c);
        } else if sign > 0 {
            out.add((a, b + 1, 1), c);
            out.add((a, b + 1, 0), &-(c * &d()));
        } else {
            out.add((a, b - 1, 1), c);
            out.add((a - 1, b, 0), &(c * &d()));
        }
    }
    out
}

/// Plain basis back to the sorted primed basis, eliminating the largest `|b|` first.
fn to_primed(mut rest: Sum) -> Sum {
    let mut out = Sum::default();
    let dd = d();
    while let Some(&(a, b, _)) = rest.0.keys().max_by_key(|k| (k.1.abs(), k.1, k.0)) {
        if b == 0 {
            for (k, c) in &rest.0 {
                out.add(*k, c);
            }
            break;
        }
        let c0 = rest.0.get(&(a, b, 0)).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::U));
        let c1 = rest.0.get(&(a, b, 1)).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::U));
        let (p0, p1) = if b > 0 {
            // inverse of the block [[1+d^2, -d], [-d, 1]]
            (&c0 + &(&dd * &c1), &(&dd * &c0) + &(&c1 + &(&(&dd * &dd) * &c1)))
        } else {
            (c0, c1)
        };
        out.add((a, b, 0), &p0);
        out.add((a, b, 1), &p1);
        rest.add_sum(&plain_of_primed((a, b, 0)), &-&p0);
        rest.add_sum(&plain_of_primed((a, b, 1)), &-&p1);
        debug_assert!(!rest.0.contains_key(&(a, b, 0)) && !rest.0.contains_key(&(a, b, 1)));
    }
    out
}

/// A term `c t^a t'_1^b g_1^e` of a sorted product.
pub type Sorted = Vec<(LaurentPoly, i64, i64, bool)>;

thread_local! {
    static CACHE: RefCell<HashMap<(i64, i64), Sorted>> = RefCell::new(HashMap::new());
}

/// `t'_1^k t^s` (`s = ±1`) as a combination of `t^a t'_1^b g_1^e`.
pub fn loop_past_t(k: i64, s: i64) -> Sorted {
    if let Some(hit) = CACHE.with(|c| c.borrow().get(&(k, s)).cloned()) {
        return hit;
    }
    let prod = times_t(&plain_power(k), s);
    let out: Sorted = to_primed(prod).0.into_iter().map(|((a, b, e), c)| (c, a, b, e == 1)).collect();
    CACHE.with(|c| c.borrow_mut().insert((k, s), out.clone()));
    out
}

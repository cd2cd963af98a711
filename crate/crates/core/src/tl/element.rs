use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::twostrand::{d, loop_past_t};
use crate::braid::{Generator, Letter, LoopKind, LoopMonomial, MixedBraidWord};
use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};

/// Level-`m` factor `t'_{m-1}^k g_{m-1} g_{m-2} .. g_i`, `1 <= i <= m`;
/// `i = m` means no crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub k: i64,
    pub i: usize,
}

/// Basis monomial of `H_{1,n}`: the product of one factor per level `1..=n`.
///
/// The crossings of a level commute with every later loop, so this is the
/// same as `t^k1 t'_1^k2 .. t'_{n-1}^kn` followed by the tail
/// `(g_1 .. g_i2)(g_2 .. g_i3) ..` read level by level, a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    factors: Vec<Factor>,
}

impl Monomial {
    pub fn identity(n: usize) -> Self {
        Monomial { factors: (1..=n.max(1)).map(|m| Factor { k: 0, i: m }).collect() }
    }

    pub fn strands(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub(crate) fn from_factors(factors: Vec<Factor>) -> Self {
        debug_assert!(factors.iter().enumerate().all(|(m, f)| f.i >= 1 && f.i <= m + 1));
        Monomial { factors }
    }

    /// `(index, exponent)` of the primed loops, increasing index.
    pub fn loops(&self) -> Vec<(usize, i64)> {
        self.factors.iter().enumerate().filter(|(_, f)| f.k != 0).map(|(m, f)| (m, f.k)).collect()
    }

    /// Crossing indices of the tail, left to right.
    pub fn tail_word(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for (m, f) in self.factors.iter().enumerate() {
            w.extend((f.i..=m).rev());
        }
        w
    }

    pub fn to_loop_monomial(&self) -> LoopMonomial {
        let mut tail = MixedBraidWord::identity(self.strands());
        for j in self.tail_word() {
            tail.push(Letter::s(j, 1)).expect("index below strand count");
        }
        LoopMonomial::new(LoopKind::Primed, self.loops(), tail).expect("pure braid tail")
    }

    fn split(&self) -> (Monomial, Factor) {
        let (top, rest) = self.factors.split_last().expect("at least one level");
        (Monomial { factors: rest.to_vec() }, *top)
    }

    fn with_top(&self, f: Factor) -> Monomial {
        let mut factors = self.factors.clone();
        factors.push(f);
        Monomial { factors }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_loop_monomial())
    }
}

/// Positive generators; `g_j^-1` is `g_j - d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Gen {
    G(usize),
    T(i64),
}

type Terms = BTreeMap<Monomial, LaurentPoly>;

fn add_to(terms: &mut Terms, m: Monomial, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(m.clone()).or_insert_with(|| LaurentPoly::zero(Var::U));
    *slot += c;
    if slot.is_zero() {
        terms.remove(&m);
    }
}

type ProductCache = HashMap<(Monomial, Gen), Vec<(Monomial, LaurentPoly)>>;

thread_local! {
    static PRODUCTS: RefCell<ProductCache> = RefCell::new(HashMap::new());
}

/// `m * gen` in the basis.
fn times_gen(m: &Monomial, gen: Gen) -> Vec<(Monomial, LaurentPoly)> {
    let key = (m.clone(), gen);
    if let Some(hit) = PRODUCTS.with(|p| p.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut out = Terms::new();
    times_gen_uncached(m, gen, &mut out);
    let v: Vec<_> = out.into_iter().collect();
    PRODUCTS.with(|p| p.borrow_mut().insert(key, v.clone()));
    v
}

fn one() -> LaurentPoly {
    LaurentPoly::one(Var::U)
}

fn times_gen_uncached(m: &Monomial, gen: Gen, out: &mut Terms) {
    let n = m.strands();
    let (prefix, Factor { k, i }) = m.split();
    // a lower generator that ends up to the left of the top factor
    let left = |g: Gen, top: Factor, out: &mut Terms| {
        for (p, c) in times_gen(&prefix, g) {
            add_to(out, p.with_top(top), &c);
        }
    };
    if n == 1 {
        let Gen::T(s) = gen else { unreachable!("no crossings on one strand") };
        add_to(out, m.split().0.with_top(Factor { k: k + s, i: 1 }), &one());
        return;
    }
    match gen {
        Gen::G(j) if j + 2 <= i => left(Gen::G(j), Factor { k, i }, out),
        Gen::G(j) if j + 1 == i => add_to(out, prefix.with_top(Factor { k, i: j }), &one()),
        Gen::G(j) if j == i => {
            add_to(out, prefix.with_top(Factor { k, i }), &d());
            add_to(out, prefix.with_top(Factor { k, i: i + 1 }), &one());
        }
        Gen::G(j) => left(Gen::G(j - 1), Factor { k, i }, out),
        // g_{n-1} .. g_1 t = t'_{n-1} g_{n-1} .. g_1
        Gen::T(s) if i == 1 => add_to(out, prefix.with_top(Factor { k: k + s, i: 1 }), &one()),
        Gen::T(s) if k == 0 => left(Gen::T(s), Factor { k, i }, out),
        Gen::T(s) => {
            // t'_{n-1}^k t = G (t'_1^k t) G^-1 with G = g_{n-1} .. g_2, which commutes with t
            for (c, a, b, e) in loop_past_t(k, s) {
                let mut x = Terms::new();
                x.insert(prefix.clone(), one());
                for _ in 0..a.unsigned_abs() {
                    x = terms_times(&x, Gen::T(a.signum()));
                }
                let mut x: Terms = x.into_iter().map(|(p, c)| (p.with_top(Factor { k: b, i: n }), c)).collect();
                if e {
                    for j in (2..n).rev() {
                        x = terms_times(&x, Gen::G(j));
                    }
                    x = terms_times(&x, Gen::G(1));
                    for j in 2..n {
                        x = terms_times_inverse(&x, j);
                    }
                }
                for j in (i..n).rev() {
                    x = terms_times(&x, Gen::G(j));
                }
                for (mm, cc) in x {
                    add_to(out, mm, &(&cc * &c));
                }
            }
        }
    }
}

fn terms_times(x: &Terms, gen: Gen) -> Terms {
    let mut out = Terms::new();
    for (m, c) in x {
        for (m2, c2) in times_gen(m, gen) {
            add_to(&mut out, m2, &(c * &c2));
        }
    }
    out
}

fn terms_times_inverse(x: &Terms, j: usize) -> Terms {
    let mut out = terms_times(x, Gen::G(j));
    let md = -d();
    for (m, c) in x {
        add_to(&mut out, m.clone(), &(c * &md));
    }
    out
}

/// Element of the type-B Hecke algebra `H_{1,n}` with coefficients in
/// `Z[u^±1]`, kept in the basis of [`Monomial`]s.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    strands: usize,
    terms: Terms,
}

impl AlgebraElement {
    pub fn zero(strands: usize) -> Self {
        AlgebraElement { strands: strands.max(1), terms: BTreeMap::new() }
    }

    pub fn one(strands: usize) -> Self {
        Self::monomial(Monomial::identity(strands), one())
    }

    pub fn monomial(m: Monomial, c: LaurentPoly) -> Self {
        let mut e = Self::zero(m.strands());
        e.add_term(m, &c);
        e
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(|| LaurentPoly::zero(Var::U))
    }

    pub fn add_term(&mut self, m: Monomial, c: &LaurentPoly) {
        debug_assert_eq!(m.strands(), self.strands);
        add_to(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), &(x * c));
        }
        out
    }

    /// Same element viewed on more strands.
    pub fn with_strands(&self, n: usize) -> Self {
        let n = n.max(self.strands);
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut factors = m.factors.clone();
            factors.extend((factors.len() + 1..=n).map(|lvl| Factor { k: 0, i: lvl }));
            out.add_term(Monomial { factors }, c);
        }
        out
    }

    /// The image of a word: `t -> t`, `sigma_i -> g_i`, `sigma_i^-1 -> g_i - d`.
    pub fn from_word(w: &MixedBraidWord) -> Result<Self> {
        let mut e = Self::one(w.strands());
        for l in w.letters() {
            e = match l.gen {
                Generator::T => e.mul_t(l.sign as i64),
                Generator::Sigma(j) => e.mul_g(j, l.sign)?,
            };
        }
        Ok(e)
    }

    pub fn from_loop_monomial(m: &LoopMonomial) -> Result<Self> {
        Self::from_word(&m.to_word())
    }

    fn mul_t(&self, sign: i64) -> Self {
        AlgebraElement { strands: self.strands, terms: terms_times(&self.terms, Gen::T(sign)) }
    }

    /// Right multiplication by `g_j^sign`.
    pub fn mul_g(&self, j: usize, sign: i8) -> Result<Self> {
        if j == 0 || j >= self.strands {
            return Err(Error::IndexOutOfRange { index: j, strands: self.strands, pos: 0 });
        }
        let terms = if sign < 0 { terms_times_inverse(&self.terms, j) } else { terms_times(&self.terms, Gen::G(j)) };
        Ok(AlgebraElement { strands: self.strands, terms })
    }

    /// Right multiplication by `t'_k^p`.
    pub fn mul_loop(&self, k: usize, p: i64) -> Result<Self> {
        if k >= self.strands {
            return Err(Error::IndexOutOfRange { index: k, strands: self.strands, pos: 0 });
        }
        let mut x = self.clone();
        for j in (1..=k).rev() {
            x = x.mul_g(j, 1)?;
        }
        for _ in 0..p.unsigned_abs() {
            x = x.mul_t(p.signum());
        }
        for j in 1..=k {
            x = x.mul_g(j, -1)?;
        }
        Ok(x)
    }

    /// Right multiplication by another element.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.strands.max(other.strands);
        let lhs = self.with_strands(n);
        let mut out = Self::zero(n);
        for (m, c) in &other.terms {
            let mut x = lhs.clone();
            for (k, p) in m.loops() {
                x = x.mul_loop(k, p)?;
            }
            for j in m.tail_word() {
                x = x.mul_g(j, 1)?;
            }
            out = out.add(&x.scale(c));
        }
        Ok(out)
    }

    pub fn to_loop_monomials(&self) -> Vec<(LoopMonomial, LaurentPoly)> {
        self.terms.iter().map(|(m, c)| (m.to_loop_monomial(), c.clone())).collect()
    }
}

/// The image of a word with the quadratic relation applied; identical to
/// [`AlgebraElement::from_word`], since every product is reduced on the fly.
pub fn quadratic_reduce(w: &MixedBraidWord) -> Result<AlgebraElement> {
    AlgebraElement::from_word(w)
}

/// Terms joined by ` + `, each as `(coefficient)monomial`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){m}")?;
        }
        Ok(())
    }
}

//! The band-move relations in `S^1 x S^2`: `t^n = bm(t^n) = A^6 x_n`, with
//! `x_n` expanded in powers of `that` and then in the basis `t^n`.

use super::xexpr::XExpression;
use crate::annular::{evaluate_closure_with_cap, SkeinVector, XPoly, DEFAULT_CAP};
use crate::braid::{parse_word, MixedBraidWord};
use crate::coeff::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::tl::{reduce_to_bst, AlgebraElement};

/// `A^6 x_n`. For `n = 0` the image is `that^0` itself: the band move does
/// nothing to the unknot.
pub fn band_move_rhs(n: u32) -> XExpression {
    if n == 0 {
        return XExpression::symbol(0, 0, LaurentPoly::one(Var::A));
    }
    XExpression::symbol(n, 0, LaurentPoly::monomial(Var::A, 1, 6))
}

/// `that^m = t t'_1 .. t'_(m-1)` as a word on `m` strands.
pub fn that_word(m: u32) -> Result<MixedBraidWord> {
    let mut text = String::from("t");
    for i in 1..m {
        text.push_str(&format!(" t{i}'"));
    }
    parse_word(&text, m.max(1) as usize)
}

/// How the class of `that^m` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Path {
    /// `m` parallel longitudes are `x^m` in the skein algebra.
    Skein,
    /// `reduce_to_bst` on the word of `that^m`.
    Algebra,
    /// State sum on the closure of the word of `that^m`.
    Diagram { cap: usize },
}

impl Path {
    pub const DIAGRAM: Path = Path::Diagram { cap: DEFAULT_CAP };
}

/// Class of `that^m` in the basis `t^n`.
pub fn that_to_bst(m: u32) -> SkeinVector {
    that_to_bst_via(m, Path::Skein).expect("skein path does not fail")
}

pub fn that_to_bst_via(m: u32, path: Path) -> Result<SkeinVector> {
    if m == 0 {
        return Ok(SkeinVector::basis(0));
    }
    match path {
        Path::Skein => XPoly::from_terms([(m, LaurentPoly::one(Var::A))]).to_skein(),
        Path::Algebra => reduce_to_bst(&AlgebraElement::from_word(&that_word(m)?)?),
        Path::Diagram { cap } => evaluate_closure_with_cap(&that_word(m)?, cap),
    }
}

/// Class of a reduced expression in the basis `t^n`.
pub fn expression_to_bst(e: &XExpression, path: Path) -> Result<SkeinVector> {
    let e = e.expand();
    let mut out = SkeinVector::zero();
    for (s, c) in e.terms() {
        out = &out + &that_to_bst_via(s.m, path)?.scale(c);
    }
    Ok(out)
}

/// `lhs_coeff t^n = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationRow {
    pub n: u32,
    pub lhs_coeff: LaurentPoly,
    pub rhs: SkeinVector,
}

impl EquationRow {
    /// Exponents in the rhs all have the parity of `n`.
    pub fn parity_ok(&self) -> bool {
        self.rhs.terms().all(|(k, _)| k % 2 == self.n % 2)
    }
}

pub fn equation_for(n: u32) -> EquationRow {
    equation_for_via(n, Path::Skein).expect("skein path does not fail")
}

/// `t^n - bm(t^n)` collected: the coefficient of `t^n` goes left, the rest right.
pub fn equation_for_via(n: u32, path: Path) -> Result<EquationRow> {
    if n == 0 {
        return Err(Error::OutOfDomain("the n = 0 band move gives the identity 1 = 1, not a row".into()));
    }
    let image = expression_to_bst(&band_move_rhs(n), path)?;
    if image.max_degree().is_some_and(|d| d > n) {
        return Err(Error::Internal(format!("band move image of t^{n} has degree above {n}")));
    }
    let top = image.coeff(n);
    let lhs_coeff = &LaurentPoly::one(Var::A) - &top;
    let rhs = &image - &SkeinVector::term(n, top);
    Ok(EquationRow { n, lhs_coeff, rhs })
}

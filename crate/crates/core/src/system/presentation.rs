//! The truncated presentation of the skein module of `S^1 x S^2` built from
//! the band move rows `(1 - A^(2n+4)) t^n = rhs`.

use super::bandmove::{equation_for, EquationRow};
use crate::coeff::{LaurentPoly, Substitution, Var};
use crate::error::Result;

/// What the rows say about `t^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub n: u32,
    /// Annihilates `t^n` modulo the lower rows.
    pub diagonal: LaurentPoly,
    /// Elements annihilating `t^n` itself, obtained by multiplying in the
    /// lower rows. Empty when the row reaches the free generator `t^0`.
    pub consequences: Vec<LaurentPoly>,
    /// The row, through lower rows, involves `t^0`.
    pub reaches_free: bool,
}

/// Where the factor `1 - A^(2i+4)` of the closing decomposition shows up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorMatch {
    pub i: u32,
    pub factor: LaurentPoly,
    /// Rows whose diagonal is this factor.
    pub diagonal_of: Vec<u32>,
    /// Rows all of whose coefficients are divisible by this factor.
    pub content_of: Vec<u32>,
}

/// Ideal generated by the `(1,+)` band move relation under a substitution,
/// compared with the ideal `(1 - A^6)` from the diagram rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub sub: Substitution,
    pub braid_generator: LaurentPoly,
    pub diagram_generator: LaurentPoly,
    pub braid_in_diagram: bool,
    pub diagram_in_braid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub truncation: u32,
    pub rows: Vec<EquationRow>,
    pub free: Vec<u32>,
    pub annihilators: Vec<Annihilator>,
    /// Factors `1 - A^(2i+4)` for `i = 0..=N`.
    pub factors: Vec<FactorMatch>,
    pub containments: Vec<Containment>,
}

impl Presentation {
    /// The row matrix in the basis `t^0 .. t^N` is lower triangular with a
    /// non-unit diagonal.
    pub fn is_triangular(&self) -> bool {
        self.rows.iter().all(|r| {
            r.rhs.max_degree().is_none_or(|d| d < r.n) && r.lhs_coeff.as_monomial().is_none() && r.parity_ok()
        })
    }

    /// Indices `i` of closing-theorem factors that no row has on its diagonal.
    pub fn unmatched_factors(&self) -> Vec<u32> {
        self.factors.iter().filter(|f| f.diagonal_of.is_empty()).map(|f| f.i).collect()
    }
}

fn one_minus(e: i64) -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(0, 1), (e, -1)])
}

fn divides(d: &LaurentPoly, p: &LaurentPoly) -> bool {
    p.div_exact(d).is_some()
}

pub fn build_presentation(truncation: u32) -> Result<Presentation> {
    let rows: Vec<EquationRow> = (1..=truncation).map(equation_for).collect();

    let mut annihilators: Vec<Annihilator> = Vec::new();
    for r in &rows {
        let reaches_free = r.rhs.terms().any(|(k, _)| k == 0 || annihilators[k as usize - 1].reaches_free);
        let consequences = if reaches_free {
            Vec::new()
        } else {
            let mut g = r.lhs_coeff.clone();
            for (k, _) in r.rhs.terms() {
                for c in &annihilators[k as usize - 1].consequences {
                    g = &g * c;
                }
            }
            vec![g]
        };
        annihilators.push(Annihilator { n: r.n, diagonal: r.lhs_coeff.clone(), consequences, reaches_free });
    }

    let factors = (0..=truncation)
        .map(|i| {
            let factor = one_minus(2 * i as i64 + 4);
            let diagonal_of = rows.iter().filter(|r| r.lhs_coeff == factor).map(|r| r.n).collect();
            let content_of = rows
                .iter()
                .filter(|r| divides(&factor, &r.lhs_coeff) && r.rhs.terms().all(|(_, c)| divides(&factor, c)))
                .map(|r| r.n)
                .collect();
            FactorMatch { i, factor, diagonal_of, content_of }
        })
        .collect();

    let braid_u = LaurentPoly::from_terms(Var::U, [(0, 1), (6, -1)]) * LaurentPoly::from_terms(Var::U, [(0, 1), (2, -1)]);
    let diagram_generator = one_minus(6);
    let containments = [Substitution::Square, Substitution::NegInvSquare]
        .into_iter()
        .map(|sub| {
            let braid_generator = sub.apply(&braid_u)?;
            Ok(Containment {
                sub,
                braid_in_diagram: divides(&diagram_generator, &braid_generator),
                diagram_in_braid: divides(&braid_generator, &diagram_generator),
                braid_generator,
                diagram_generator: diagram_generator.clone(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(Presentation { truncation, rows, free: vec![0], annihilators, factors, containments })
}

//! JSON forms. Coefficients are strings in the canonical Laurent form, basis
//! labels are `t^n` and trace monomials are labelled like `s_1^2 s_3`.

use serde_json::{json, Map, Value};

use crate::annular::SkeinVector;
use crate::coeff::{LaurentPoly, LocalizedCoeff};
use crate::error::{Error, Result};
use crate::system::{Annihilator, Containment, Elimination, EquationRow, FactorMatch, Presentation};
use crate::tl::trace::{monomial_label, parse_monomial_label};
use crate::tl::TracePolynomial;

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

/// `{"t^2": "-A^-2", "t^0": "-A^2"}`, highest degree first.
pub fn skein_to_json(v: &SkeinVector) -> Value {
    let mut m = Map::new();
    for (n, c) in v.terms().rev() {
        m.insert(format!("t^{n}"), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn skein_from_json(v: &Value) -> Result<SkeinVector> {
    let obj = v.as_object().ok_or_else(|| bad("expected an object of t^n labels"))?;
    let mut out = SkeinVector::zero();
    for (k, c) in obj {
        let n: u32 = k
            .strip_prefix("t^")
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| bad(format!("bad basis label `{k}`")))?;
        let c: LaurentPoly = c.as_str().ok_or_else(|| bad("coefficient must be a string"))?.parse()?;
        out.add_term(n, &c);
    }
    Ok(out)
}

pub fn trace_to_json(p: &TracePolynomial) -> Value {
    let mut m = Map::new();
    for (k, c) in p.terms() {
        m.insert(monomial_label(k), Value::String(c.to_string()));
    }
    Value::Object(m)
}

pub fn trace_from_json(v: &Value) -> Result<TracePolynomial> {
    let obj = v.as_object().ok_or_else(|| bad("expected an object of trace monomials"))?;
    let mut out = TracePolynomial::zero();
    for (k, c) in obj {
        let c: LocalizedCoeff = c.as_str().ok_or_else(|| bad("coefficient must be a string"))?.parse()?;
        out.add_term(parse_monomial_label(k)?, &c);
    }
    Ok(out)
}

fn support(v: &SkeinVector) -> Vec<u32> {
    v.terms().rev().map(|(n, _)| n).collect()
}

pub fn row_to_json(r: &EquationRow) -> Value {
    json!({
        "n": r.n,
        "lhs_coeff": r.lhs_coeff.to_string(),
        "rhs": skein_to_json(&r.rhs),
        "rhs_support": support(&r.rhs),
    })
}

fn strings(ps: &[LaurentPoly]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn annihilator_to_json(a: &Annihilator) -> Value {
    json!({
        "n": a.n,
        "diagonal": a.diagonal.to_string(),
        "consequences": strings(&a.consequences),
        "reaches_free": a.reaches_free,
    })
}

fn factor_to_json(f: &FactorMatch) -> Value {
    json!({
        "i": f.i,
        "factor": f.factor.to_string(),
        "diagonal_of_rows": f.diagonal_of,
        "divides_rows": f.content_of,
    })
}

fn containment_to_json(c: &Containment) -> Value {
    json!({
        "substitution": c.sub.label(),
        "braid_generator": c.braid_generator.to_string(),
        "diagram_generator": c.diagram_generator.to_string(),
        "braid_in_diagram": c.braid_in_diagram,
        "diagram_in_braid": c.diagram_in_braid,
    })
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    let unmatched = p.unmatched_factors();
    json!({
        "truncation": p.truncation,
        "free": p.free.iter().map(|n| format!("t^{n}")).collect::<Vec<_>>(),
        "rows": p.rows.iter().map(row_to_json).collect::<Vec<_>>(),
        "annihilators": p.annihilators.iter().map(annihilator_to_json).collect::<Vec<_>>(),
        "indexing": {
            "factors_from_i0": p.factors.iter().map(factor_to_json).collect::<Vec<_>>(),
            "unmatched_diagonals": unmatched,
            "rows_match": "row n has diagonal 1-A^(2n+4), i.e. index i = n starting at i = 1",
        },
        "ideal_comparison": p.containments.iter().map(containment_to_json).collect::<Vec<_>>(),
    })
}

pub fn elimination_to_json(e: &Elimination) -> Value {
    json!({
        "equations": e.equations.iter().map(|(n, eq)| json!({"n": n, "collapsed": trace_to_json(eq)})).collect::<Vec<_>>(),
        "solved": e.solved.iter().map(|s| json!({
            "n": s.n,
            "lhs": format!("({})*s_{}", s.q, s.n),
            "rhs": format!("({})*s_{}", s.p, s.base),
        })).collect::<Vec<_>>(),
        "remaining": e.remaining.iter().map(|k| format!("s_{k}")).collect::<Vec<_>>(),
    })
}

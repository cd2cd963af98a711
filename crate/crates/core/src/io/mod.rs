//! Serialization and the command dispatch behind the `kbsm` binary.

pub mod json;
pub mod table;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::annular::{evaluate_closure_with_cap, DEFAULT_CAP};
use crate::braid::parse_word;
use crate::coeff::Substitution;
use crate::error::{Error, Result};
use crate::system::{bbm_equation_for, build_presentation, collapse, eliminate, equation_for};
use crate::tl::{invariant_V, markov_trace, reduce_to_bst_with, AlgebraElement, TracePolynomial};

pub use verify::{verify_suite, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Reduce,
    Trace,
    Invariant,
    System,
    Presentation,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown format `{s}` (json, csv, text)") }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub strands: Option<usize>,
    pub word: Option<String>,
    pub truncation: Option<u32>,
    /// `None` picks the command's default: `u=A2` for `reduce`, `u=-A-2`
    /// for collapsing trace products in `system`.
    pub sub: Option<Substitution>,
    pub cap: usize,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: Command::Verify,
            strands: None,
            word: None,
            truncation: None,
            sub: None,
            cap: DEFAULT_CAP,
            format: Format::Json,
        }
    }
}

/// A configuration that cannot run, as opposed to a domain refusal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl RunConfig {
    pub fn validate(&self) -> std::result::Result<(), UsageError> {
        let needs_word = matches!(self.command, Command::Eval | Command::Reduce | Command::Trace | Command::Invariant);
        if needs_word && (self.strands.is_none() || self.word.is_none()) {
            return Err(UsageError("this command needs --n and --word".into()));
        }
        if !needs_word && (self.strands.is_some() || self.word.is_some()) {
            return Err(UsageError("--n and --word only apply to eval, reduce, trace and invariant".into()));
        }
        let needs_n = matches!(self.command, Command::System | Command::Presentation);
        if needs_n && self.truncation.is_none() {
            return Err(UsageError("this command needs --N".into()));
        }
        if !needs_n && self.truncation.is_some() {
            return Err(UsageError("--N only applies to system and presentation".into()));
        }
        if self.truncation == Some(0) {
            return Err(UsageError("--N must be at least 1".into()));
        }
        if self.format == Format::Csv && !needs_n {
            return Err(UsageError("csv output is only available for equation tables (system, presentation)".into()));
        }
        Ok(())
    }
}

/// Output text and whether every reported check passed.
pub struct RunOutput {
    pub text: String,
    pub ok: bool,
}

fn render(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

/// Text form of a trace value with unit coefficients left out, e.g. `1`.
pub fn trace_text(p: &TracePolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .terms()
        .map(|(k, c)| {
            let label = crate::tl::trace::monomial_label(k);
            if c == &crate::coeff::LocalizedCoeff::one(c.var()) {
                label
            } else if k.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{label}")
            }
        })
        .collect();
    parts.join(" + ")
}

fn trace_out(p: &TracePolynomial, f: Format) -> String {
    match f {
        Format::Text => trace_text(p),
        _ => render(json::trace_to_json(p)),
    }
}

pub fn run(cfg: &RunConfig) -> Result<RunOutput> {
    let word = || parse_word(cfg.word.as_deref().unwrap_or(""), cfg.strands.unwrap_or(1));
    let n_max = cfg.truncation.unwrap_or(1);
    let text = match cfg.command {
        Command::Eval => {
            let v = evaluate_closure_with_cap(&word()?, cfg.cap)?;
            match cfg.format {
                Format::Text => v.to_string(),
                _ => render(json::skein_to_json(&v)),
            }
        }
        Command::Reduce => {
            let e = AlgebraElement::from_word(&word()?)?;
            let v = reduce_to_bst_with(&e, cfg.sub.unwrap_or(Substitution::Square))?;
            match cfg.format {
                Format::Text => v.to_string(),
                _ => render(json::skein_to_json(&v)),
            }
        }
        Command::Trace => trace_out(&markov_trace(&word()?)?, cfg.format),
        Command::Invariant => trace_out(&invariant_V(&word()?)?, cfg.format),
        Command::System => {
            let sub = cfg.sub.unwrap_or(Substitution::NegInvSquare);
            let rows: Vec<_> = (1..=n_max).map(equation_for).collect();
            match cfg.format {
                Format::Csv => table::rows_to_csv(&rows)?,
                Format::Text => {
                    let mut s = String::new();
                    for n in 0..=n_max {
                        for sign in [-1i8, 1] {
                            s.push_str(&format!("bbm({n},{sign:+}): {} = 0\n", bbm_equation_for(n, sign)?));
                        }
                    }
                    for r in &rows {
                        s.push_str(&format!("({}) t^{} = {}\n", r.lhs_coeff, r.n, r.rhs));
                    }
                    s
                }
                Format::Json => {
                    let mut bbm = Vec::new();
                    for n in 0..=n_max {
                        for sign in [-1i8, 1] {
                            let eq = bbm_equation_for(n, sign)?;
                            bbm.push(json!({
                                "n": n,
                                "sign": sign,
                                "equation": json::trace_to_json(&eq),
                                "collapsed": json::trace_to_json(&collapse(&eq, sub)?),
                            }));
                        }
                    }
                    render(json!({
                        "substitution": sub.label(),
                        "braid_band_moves": bbm,
                        "elimination": json::elimination_to_json(&eliminate(n_max, -1, sub)?),
                        "band_moves": rows.iter().map(json::row_to_json).collect::<Vec<_>>(),
                    }))
                }
            }
        }
        Command::Presentation => {
            let p = build_presentation(n_max)?;
            match cfg.format {
                Format::Csv => table::rows_to_csv(&p.rows)?,
                Format::Text => p
                    .rows
                    .iter()
                    .map(|r| format!("({}) t^{} = {}\n", r.lhs_coeff, r.n, r.rhs))
                    .collect(),
                Format::Json => render(json::presentation_to_json(&p)),
            }
        }
        Command::Verify => {
            let checks = verify_suite()?;
            let ok = checks.iter().all(|c| c.passed);
            let text = match cfg.format {
                Format::Text => checks
                    .iter()
                    .map(|c| format!("[{}] {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name))
                    .collect(),
                _ => render(verify::report_to_json(&checks)),
            };
            return Ok(RunOutput { text, ok });
        }
    };
    Ok(RunOutput { text, ok: true })
}

use std::collections::BTreeMap;
use std::fmt;

use super::word::{expand_looping, Generator, MixedBraidWord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopKind {
    /// Monomials in `t_i`.
    Plain,
    /// Monomials in `t'_i`.
    Primed,
}

/// `t_{i1}^{k1} ... t_{im}^{km} * tail` with strictly increasing indices,
/// nonzero exponents and a tail made of `sigma` letters only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LoopMonomial {
    kind: LoopKind,
    exponents: BTreeMap<usize, i64>,
    tail: MixedBraidWord,
}

impl LoopMonomial {
    pub fn new(kind: LoopKind, exponents: impl IntoIterator<Item = (usize, i64)>, tail: MixedBraidWord) -> Result<Self> {
        if let Some(l) = tail.letters().iter().find(|l| l.gen == Generator::T) {
            return Err(Error::Unsupported(format!("tail must be a pure braid, found `{l}`")));
        }
        let mut map = BTreeMap::new();
        for (i, k) in exponents {
            *map.entry(i).or_insert(0) += k;
        }
        map.retain(|_, k| *k != 0);
        Ok(LoopMonomial { kind, exponents: map, tail })
    }

    /// Loop part only, trivial tail.
    pub fn loops(kind: LoopKind, exponents: impl IntoIterator<Item = (usize, i64)>) -> Self {
        Self::new(kind, exponents, MixedBraidWord::identity(1)).expect("empty tail")
    }

    pub fn kind(&self) -> LoopKind {
        self.kind
    }

    pub fn exponents(&self) -> &BTreeMap<usize, i64> {
        &self.exponents
    }

    pub fn tail(&self) -> &MixedBraidWord {
        &self.tail
    }

    pub fn exponent_total(&self) -> i64 {
        self.exponents.values().sum()
    }

    /// Strands needed to write the monomial.
    pub fn strands(&self) -> usize {
        let top = self.exponents.keys().next_back().map_or(1, |i| i + 1);
        top.max(self.tail.strands())
    }

    /// Defining word: loop factors in increasing index order, then the tail.
    pub fn to_word(&self) -> MixedBraidWord {
        let n = self.strands();
        let mut w = MixedBraidWord::identity(n);
        for (&i, &k) in &self.exponents {
            w = w.concat(&expand_looping(i, self.kind == LoopKind::Primed, k));
        }
        w.concat(&self.tail)
    }
}

impl fmt::Display for LoopMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prime = if self.kind == LoopKind::Primed { "'" } else { "" };
        let mut parts = Vec::new();
        for (&i, &k) in &self.exponents {
            let base = if i == 0 { "t".to_string() } else { format!("t{i}{prime}") };
            parts.push(if k == 1 { base } else { format!("{base}^{k}") });
        }
        if !self.tail.is_empty() {
            parts.push(self.tail.to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Distinct looping indices minus one, ignoring gaps; `0` without loops.
pub fn index_of(m: &LoopMonomial) -> usize {
    m.exponents.len().saturating_sub(1)
}

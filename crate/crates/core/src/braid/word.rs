use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// The loop generator around the fixed strand.
    T,
    /// `sigma_i`, crossing moving strands `i` and `i+1` (1-based).
    Sigma(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    /// `+1` or `-1`.
    pub sign: i8,
}

impl Letter {
    pub fn t(sign: i8) -> Self {
        Letter { gen: Generator::T, sign }
    }

    pub fn s(i: usize, sign: i8) -> Self {
        Letter { gen: Generator::Sigma(i), sign }
    }

    pub fn inverse(self) -> Self {
        Letter { sign: -self.sign, ..self }
    }

    pub fn is_sigma(self) -> bool {
        matches!(self.gen, Generator::Sigma(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Generator::T => write!(f, "t")?,
            Generator::Sigma(i) => write!(f, "s{i}")?,
        }
        if self.sign < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in `t^±1, sigma_i^±1` on `strands` moving strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedBraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl MixedBraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse { pos: 0, msg: "strand count must be positive".into() });
        }
        for (pos, l) in letters.iter().enumerate() {
            if let Generator::Sigma(i) = l.gen {
                if i == 0 || i >= strands {
                    return Err(Error::IndexOutOfRange { index: i, strands, pos });
                }
            }
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::Parse { pos, msg: format!("letter sign {} is not +-1", l.sign) });
            }
        }
        Ok(MixedBraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        MixedBraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of signs of the `sigma` letters.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().filter(|l| l.is_sigma()).map(|l| l.sign as i64).sum()
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.iter().filter(|l| l.is_sigma()).count()
    }

    pub fn t_count(&self) -> usize {
        self.letters.len() - self.crossing_count()
    }

    /// Same letters on more strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    pub fn inverse(&self) -> Self {
        MixedBraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self * other`; the result lives on the larger strand count.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        MixedBraidWord { strands: self.strands.max(other.strands), letters }
    }

    pub fn push(&mut self, l: Letter) -> Result<()> {
        if let Generator::Sigma(i) = l.gen {
            if i == 0 || i >= self.strands {
                return Err(Error::IndexOutOfRange { index: i, strands: self.strands, pos: self.letters.len() });
            }
        }
        self.letters.push(l);
        Ok(())
    }

    /// Cancels adjacent `g g^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&p| p == l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        MixedBraidWord { strands: self.strands, letters: out }
    }
}

/// Writes the word back in the input grammar; the empty word prints as an empty string.
impl fmt::Display for MixedBraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Defining word of `t_i^k` (plain) or `t'_i^k` (primed), on `i+1` strands.
///
/// `t'_i = s_i..s_1 t s_1^-1..s_i^-1`, `t_i = s_i..s_1 t s_1..s_i`.
pub fn expand_looping(i: usize, primed: bool, k: i64) -> MixedBraidWord {
    let mut letters = Vec::new();
    let up = |sign: i8| (1..=i).rev().map(move |j| Letter::s(j, sign));
    let down = |sign: i8| (1..=i).map(move |j| Letter::s(j, sign));
    if k != 0 {
        let sign: i8 = if k > 0 { 1 } else { -1 };
        if primed {
            letters.extend(up(1));
            letters.extend(std::iter::repeat_n(Letter::t(sign), k.unsigned_abs() as usize));
            letters.extend(down(-1));
        } else {
            // (s_i..s_1 t s_1..s_i)^-1 = s_i^-1..s_1^-1 t^-1 s_1^-1..s_i^-1
            for _ in 0..k.unsigned_abs() {
                letters.extend(up(sign));
                letters.push(Letter::t(sign));
                letters.extend(down(sign));
            }
        }
    }
    MixedBraidWord { strands: i + 1, letters }
}

/// Parses the word grammar: whitespace-separated tokens `t`, `sK`, `tK`, `tK'`,
/// each with an optional `^N` suffix. Looping tokens are expanded.
pub fn parse_word(text: &str, strands: usize) -> Result<MixedBraidWord> {
    if strands == 0 {
        return Err(Error::Parse { pos: 0, msg: "strand count must be positive".into() });
    }
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let pos = offset + text[offset..].find(token).unwrap_or(0);
        offset = pos + token.len();
        let bad = |msg: String| Error::Parse { pos, msg };
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => {
                let n: i64 = e.parse().map_err(|_| bad(format!("malformed exponent `{e}`")))?;
                (b, n)
            }
            None => (token, 1),
        };
        let sign: i8 = if exp < 0 { -1 } else { 1 };
        let reps = exp.unsigned_abs() as usize;
        if let Some(rest) = base.strip_prefix('s') {
            let i: usize = rest.parse().map_err(|_| bad(format!("unknown token `{token}`")))?;
            if i == 0 || i >= strands {
                return Err(Error::IndexOutOfRange { index: i, strands, pos });
            }
            letters.extend(std::iter::repeat_n(Letter::s(i, sign), reps));
        } else if let Some(rest) = base.strip_prefix('t') {
            let (digits, primed) = match rest.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (rest, false),
            };
            if digits.is_empty() {
                if primed {
                    return Err(bad(format!("unknown token `{token}`")));
                }
                letters.extend(std::iter::repeat_n(Letter::t(sign), reps));
                continue;
            }
            let i: usize = digits.parse().map_err(|_| bad(format!("unknown token `{token}`")))?;
            if i >= strands {
                return Err(Error::IndexOutOfRange { index: i, strands, pos });
            }
            letters.extend(expand_looping(i, primed, exp).letters);
        } else {
            return Err(bad(format!("unknown token `{token}`")));
        }
    }
    MixedBraidWord::new(strands, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenizes_in_order() {
        let w = parse_word("t s1 t s1^-1", 2).unwrap();
        assert_eq!(w.letters(), &[Letter::t(1), Letter::s(1, 1), Letter::t(1), Letter::s(1, -1)]);
    }

    #[test]
    fn looping_tokens_expand() {
        let w = parse_word("t1'", 2).unwrap();
        assert_eq!(w.letters(), &[Letter::s(1, 1), Letter::t(1), Letter::s(1, -1)]);
        let w = parse_word("t1", 2).unwrap();
        assert_eq!(w.letters(), &[Letter::s(1, 1), Letter::t(1), Letter::s(1, 1)]);
        let w = parse_word("t2'^2", 3).unwrap();
        assert_eq!(w.to_string(), "s2 s1 t t s1^-1 s2^-1");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_word("s3", 2), Err(Error::IndexOutOfRange { index: 3, .. })));
        assert!(matches!(parse_word("t x", 2), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_word("s1^a", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_word("t2", 2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn powers() {
        assert_eq!(parse_word("s1^3", 2).unwrap().len(), 3);
        assert_eq!(parse_word("t^-2", 1).unwrap().letters(), &[Letter::t(-1), Letter::t(-1)]);
        assert!(parse_word("t^0", 1).unwrap().is_empty());
    }

    #[test]
    fn expansions() {
        assert_eq!(expand_looping(1, true, 1).to_string(), "s1 t s1^-1");
        assert_eq!(expand_looping(1, false, 1).to_string(), "s1 t s1");
        assert_eq!(expand_looping(0, true, 3).to_string(), "t t t");
        assert_eq!(expand_looping(1, false, -1).to_string(), "s1^-1 t^-1 s1^-1");
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(parse_word("t t", 1).unwrap().exponent_sum(), 0);
        assert_eq!(parse_word("s1 t s1", 2).unwrap().exponent_sum(), 2);
        assert_eq!(parse_word("s1 s2^-1", 3).unwrap().exponent_sum(), 0);
    }

    #[test]
    fn free_reduction() {
        let w = parse_word("t s1 s1^-1 t^-1 s1", 2).unwrap();
        assert_eq!(w.free_reduce().to_string(), "s1");
    }
}

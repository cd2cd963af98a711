use std::fmt;

use super::word::{expand_looping, Generator, Letter, MixedBraidWord};
use crate::error::{Error, Result};

/// The moves generating equivalence of mixed braids in the solid torus,
/// plus the braid band move of `S^1 x S^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// `w -> b^-1 w b`
    Conj(MixedBraidWord),
    /// `w -> w s_n^±1` on one more strand
    Stab(i8),
    /// `w -> t^±1 w t^∓1`
    LoopConj(i8),
    /// `w -> w_+ s_1^±1` with every `t` replaced by `t_1`
    Bbm(i8),
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sgn = |s: &i8| if *s > 0 { "+" } else { "-" };
        match self {
            Move::Conj(b) => write!(f, "conj({b})"),
            Move::Stab(s) => write!(f, "stab({})", sgn(s)),
            Move::LoopConj(s) => write!(f, "loop_conj({})", sgn(s)),
            Move::Bbm(s) => write!(f, "bbm({})", sgn(s)),
        }
    }
}

fn unit(sign: i8) -> Result<i8> {
    match sign {
        1 | -1 => Ok(sign),
        _ => Err(Error::Parse { pos: 0, msg: format!("move sign {sign} is not +-1") }),
    }
}

pub fn apply_move(w: &MixedBraidWord, mv: &Move) -> Result<MixedBraidWord> {
    match mv {
        Move::Conj(b) => {
            if b.strands() != w.strands() {
                return Err(Error::StrandMismatch(w.strands(), b.strands()));
            }
            Ok(b.inverse().concat(w).concat(b))
        }
        Move::Stab(s) => {
            let n = w.strands();
            let mut out = w.with_strands(n + 1)?;
            out.push(Letter::s(n, unit(*s)?))?;
            Ok(out)
        }
        Move::LoopConj(s) => {
            let s = unit(*s)?;
            let t = MixedBraidWord::new(w.strands(), vec![Letter::t(s)])?;
            Ok(t.concat(w).concat(&t.inverse()))
        }
        Move::Bbm(s) => {
            let s = unit(*s)?;
            let mut letters = Vec::new();
            for l in w.letters() {
                match l.gen {
                    Generator::T => letters.extend_from_slice(expand_looping(1, false, l.sign as i64).letters()),
                    Generator::Sigma(i) => letters.push(Letter::s(i + 1, l.sign)),
                }
            }
            letters.push(Letter::s(1, s));
            MixedBraidWord::new(w.strands() + 1, letters)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::word::parse_word;

    #[test]
    fn bbm_on_t() {
        let w = parse_word("t", 1).unwrap();
        let b = apply_move(&w, &Move::Bbm(1)).unwrap();
        assert_eq!(b.strands(), 2);
        assert_eq!(b.to_string(), "s1 t s1 s1");
        assert_eq!(b.exponent_sum(), 3);
    }

    #[test]
    fn stab_and_loop_conj() {
        let w = parse_word("t", 1).unwrap();
        assert_eq!(apply_move(&w, &Move::Stab(1)).unwrap().to_string(), "t s1");
        let w = parse_word("s1", 2).unwrap();
        assert_eq!(apply_move(&w, &Move::LoopConj(1)).unwrap().to_string(), "t s1 t^-1");
    }

    #[test]
    fn conj_checks_strands() {
        let w = parse_word("s1", 2).unwrap();
        let b = parse_word("s1 s2", 3).unwrap();
        assert!(matches!(apply_move(&w, &Move::Conj(b)), Err(Error::StrandMismatch(2, 3))));
        let b = parse_word("t", 2).unwrap();
        assert_eq!(apply_move(&w, &Move::Conj(b)).unwrap().to_string(), "t^-1 s1 t");
    }

    #[test]
    fn bbm_shifts_indices() {
        let w = parse_word("s1 t s2^-1", 3).unwrap();
        let b = apply_move(&w, &Move::Bbm(-1)).unwrap();
        assert_eq!(b.to_string(), "s2 s1 t s1 s3^-1 s1^-1");
    }
}

use super::{AlgebraError, Element, HeckeAlgebra};
use std::fmt;

/// A generator letter. `TK`, `LK` and `J` are macros for `t_k`, `L_k` and `J_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    S(usize),
    J(usize),
    TK(usize),
    LK(usize),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T => write!(f, "t"),
            Letter::S(i) => write!(f, "s{i}"),
            Letter::J(k) => write!(f, "J{k}"),
            Letter::TK(k) => write!(f, "T{k}"),
            Letter::LK(k) => write!(f, "L{k}"),
        }
    }
}

/// A word in the generators over a fixed ambient `(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord {
    pub m: usize,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(m: usize, n: usize, letters: Vec<Letter>) -> Result<Self, AlgebraError> {
        for &l in &letters {
            let (what, index, ok) = match l {
                Letter::T => ("t", 1, n >= 1),
                Letter::S(i) => ("s", i, i >= 1 && i < n),
                Letter::J(k) => ("J", k, k >= 1 && k <= n),
                Letter::TK(k) => ("T", k, k >= 1 && k <= n),
                Letter::LK(k) => ("L", k, k >= 1 && k <= n),
            };
            if !ok {
                return Err(AlgebraError::Index { what, index, n });
            }
        }
        Ok(GenWord { m, n, letters })
    }

    /// Expand `t_k` macros into `s_(k-1) ... s_1 t s_1 ... s_(k-1)`.
    fn expanded(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match l {
                Letter::TK(k) => {
                    out.extend((1..k).rev().map(Letter::S));
                    out.push(Letter::T);
                    out.extend((1..k).map(Letter::S));
                }
                other => out.push(other),
            }
        }
        out
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl HeckeAlgebra {
    /// Normal form of a generator word, folding letters left to right.
    pub fn normalize_word(&self, word: &GenWord) -> Result<Element, AlgebraError> {
        if word.m != self.m() {
            return Err(AlgebraError::AmbientMismatch {
                left: (self.m(), word.n),
                right: (word.m, word.n),
            });
        }
        let n = word.n;
        let mut acc = self.one(n);
        for letter in word.expanded() {
            acc = match letter {
                Letter::T => self.right_mul_j(&acc, 1)?,
                Letter::S(i) => acc.right_mul_s(i)?,
                Letter::J(k) => self.right_mul_j(&acc, k)?,
                Letter::LK(k) => self.mul(&acc, &self.lk(k, n)?)?,
                Letter::TK(_) => unreachable!("expanded above"),
            };
        }
        Ok(acc)
    }

    /// Shorthand for normalizing a word given as letters.
    pub fn word(&self, n: usize, letters: &[Letter]) -> Result<Element, AlgebraError> {
        self.normalize_word(&GenWord::new(self.m(), n, letters.to_vec())?)
    }
}

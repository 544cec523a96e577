//! Exact coefficient ring `Q[u1..um, z, y1..y(m-1)]`.

mod parse;
mod poly;

pub use parse::{parse_polynomial, tokenize, Cursor, LexError, Token, TokenKind};
pub use poly::{Exponents, Polynomial};

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("polynomials live over different variable tables (m = {0} vs m = {1})")]
    TableMismatch(usize, usize),
    #[error("unknown variable `{0}` for m = {1}")]
    UnknownVariable(String, usize),
    #[error("elementary symmetric index {i} out of range 0..={m}")]
    SymIndex { i: usize, m: usize },
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A variable of the coefficient ring. Indices are one-based as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    U(usize),
    Z,
    Y(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::U(i) => write!(f, "u{i}"),
            Var::Z => write!(f, "z"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Variable layout for a given `m`: `u1..um, z, y1..y(m-1)`, 2m slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VarTable {
    m: usize,
}

impl VarTable {
    pub fn new(m: usize) -> Self {
        assert!(m >= 1, "m must be positive");
        VarTable { m }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        2 * self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn slot(&self, v: Var) -> Option<usize> {
        match v {
            Var::U(i) if (1..=self.m).contains(&i) => Some(i - 1),
            Var::Z => Some(self.m),
            Var::Y(i) if (1..self.m).contains(&i) => Some(self.m + i),
            _ => None,
        }
    }

    pub fn var(&self, slot: usize) -> Var {
        if slot < self.m {
            Var::U(slot + 1)
        } else if slot == self.m {
            Var::Z
        } else {
            Var::Y(slot - self.m)
        }
    }

    /// Resolve a textual name such as `u2`, `z`, `y1`.
    pub fn lookup(&self, name: &str) -> Result<Var, CoeffError> {
        let unknown = || CoeffError::UnknownVariable(name.to_string(), self.m);
        let v = if name == "z" {
            Var::Z
        } else if let Some(rest) = name.strip_prefix('u') {
            Var::U(rest.parse().map_err(|_| unknown())?)
        } else if let Some(rest) = name.strip_prefix('y') {
            Var::Y(rest.parse().map_err(|_| unknown())?)
        } else {
            return Err(unknown());
        };
        self.slot(v).map(|_| v).ok_or_else(unknown)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.len()).map(|s| self.var(s))
    }
}

/// Partial assignment of rational values to variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    values: Vec<(Var, Rational)>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, v: Var, value: Rational) -> Self {
        self.set(v, value);
        self
    }

    pub fn set(&mut self, v: Var, value: Rational) {
        match self.values.iter_mut().find(|(w, _)| *w == v) {
            Some(slot) => slot.1 = value,
            None => self.values.push((v, value)),
        }
    }

    pub fn get(&self, v: Var) -> Option<&Rational> {
        self.values.iter().find(|(w, _)| *w == v).map(|(_, r)| r)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Var, Rational)> {
        self.values.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Parse `z=0,y1=1,u2=-1/3`, checking names against `vt`.
    pub fn parse(text: &str, vt: VarTable) -> Result<Self, CoeffError> {
        let mut out = Bindings::new();
        let mut offset = 0;
        for part in text.split(',') {
            let col = offset + 1;
            offset += part.len() + 1;
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (name, value) = part.split_once('=').ok_or_else(|| CoeffError::Parse {
                pos: col,
                msg: format!("expected `name=value`, found `{part}`"),
            })?;
            let var = vt.lookup(name.trim())?;
            let value = parse_rational(value.trim()).ok_or_else(|| CoeffError::Parse {
                pos: col,
                msg: format!("bad rational `{}`", value.trim()),
            })?;
            out.set(var, value);
        }
        Ok(out)
    }
}

/// Parse `-3`, `7/2`, `+1/3`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.strip_prefix('+').unwrap_or(num).parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

/// The i-th elementary symmetric polynomial in `u1..um`.
pub fn elem_sym(i: usize, m: usize) -> Result<Polynomial, CoeffError> {
    if i > m {
        return Err(CoeffError::SymIndex { i, m });
    }
    let vt = VarTable::new(m);
    let mut out = Polynomial::zero(m);
    for subset in itertools::Itertools::combinations(1..=m, i) {
        let mut e = Exponents::zero(vt.len());
        for u in subset {
            e.set(u - 1, 1);
        }
        out.add_term(e, Rational::from_integer(1.into()));
    }
    Ok(out)
}

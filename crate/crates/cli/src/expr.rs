//! Expression grammar over the generators.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := 't' | 's'uint | 'J'uint | 'T'uint | 'L'uint | scalar | '(' expr ')'
//! scalar := integer ('/' integer)? | u<i> | z | y<i>
//! ```

use hecke_core::coeffring::{tokenize, Cursor, Polynomial, TokenKind, VarTable};
use hecke_core::heckealg::{AlgebraError, Element, GenWord, HeckeAlgebra, Letter};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{line}:{col}: {source}")]
    Range {
        line: usize,
        col: usize,
        source: AlgebraError,
    },
}

/// A formal linear combination of generator words, in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSum {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<(Polynomial, GenWord)>,
}

impl WordSum {
    /// Normal form of the combination in the standard basis.
    pub fn normalize(&self, alg: &HeckeAlgebra) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(self.m, self.n);
        for (c, w) in &self.terms {
            out.add_scaled(c, &alg.normalize_word(w)?);
        }
        Ok(out)
    }
}

type Terms = Vec<(Polynomial, Vec<Letter>)>;

fn collect(terms: impl IntoIterator<Item = (Polynomial, Vec<Letter>)>) -> Terms {
    let mut index: HashMap<Vec<Letter>, usize> = HashMap::new();
    let mut out: Terms = Vec::new();
    for (c, w) in terms {
        match index.get(&w) {
            Some(&i) => out[i].0.add_assign_ref(&c),
            None => {
                index.insert(w.clone(), out.len());
                out.push((c, w));
            }
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

struct Parser {
    m: usize,
    n: usize,
    vt: VarTable,
}

/// Parse `text` as an element of `H_n` with `m` cyclotomic parameters.
pub fn parse_expr(text: &str, m: usize, n: usize) -> Result<WordSum, ParseError> {
    let tokens = tokenize(text).map_err(|e| ParseError::Syntax {
        line: e.line,
        col: e.col,
        msg: format!("unexpected character `{}`", e.found),
    })?;
    let mut cur = Cursor::new(&tokens, text);
    let p = Parser {
        m,
        n,
        vt: VarTable::new(m),
    };
    let terms = p.expr(&mut cur)?;
    if !cur.at_end() {
        return Err(syntax(cur.location(), "unexpected trailing input"));
    }
    let terms = terms
        .into_iter()
        .map(|(c, letters)| {
            (
                c,
                GenWord::new(m, n, letters).expect("letters are range-checked"),
            )
        })
        .collect();
    Ok(WordSum { m, n, terms })
}

fn syntax((line, col): (usize, usize), msg: &str) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.to_string(),
    }
}

impl Parser {
    fn scalar(&self, c: Polynomial) -> Terms {
        vec![(c, Vec::new())]
    }

    fn expr(&self, cur: &mut Cursor) -> Result<Terms, ParseError> {
        let mut acc = self.term(cur)?;
        loop {
            let negate = if cur.eat(&TokenKind::Plus) {
                false
            } else if cur.eat(&TokenKind::Minus) {
                true
            } else {
                return Ok(collect(acc));
            };
            let mut t = self.term(cur)?;
            if negate {
                t.iter_mut().for_each(|(c, _)| *c = -&*c);
            }
            acc.extend(t);
        }
    }

    fn term(&self, cur: &mut Cursor) -> Result<Terms, ParseError> {
        let mut acc = self.factor(cur)?;
        while cur.eat(&TokenKind::Star) {
            let rhs = self.factor(cur)?;
            acc = self.multiply(&acc, &rhs);
        }
        Ok(acc)
    }

    fn multiply(&self, a: &Terms, b: &Terms) -> Terms {
        let products = a.iter().flat_map(|(ca, wa)| {
            b.iter().map(move |(cb, wb)| {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                (ca * cb, w)
            })
        });
        collect(products)
    }

    fn factor(&self, cur: &mut Cursor) -> Result<Terms, ParseError> {
        if cur.eat(&TokenKind::Minus) {
            let mut t = self.factor(cur)?;
            t.iter_mut().for_each(|(c, _)| *c = -&*c);
            return Ok(t);
        }
        let base = self.atom(cur)?;
        match cur.exponent() {
            Ok(None) => Ok(base),
            Ok(Some(k)) => {
                let mut acc = self.scalar(Polynomial::one(self.m));
                for _ in 0..k {
                    acc = self.multiply(&acc, &base);
                }
                Ok(acc)
            }
            Err(loc) => Err(syntax(loc, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&self, cur: &mut Cursor) -> Result<Terms, ParseError> {
        if let Some(r) = cur.rational_literal() {
            return r
                .map(|c| self.scalar(Polynomial::constant(self.m, c)))
                .map_err(|loc| syntax(loc, "expected a nonzero denominator"));
        }
        let loc = cur.location();
        match cur.advance().map(|t| &t.kind) {
            Some(TokenKind::Ident(name)) => self.ident(name, loc),
            Some(TokenKind::LParen) => {
                let inner = self.expr(cur)?;
                if !cur.eat(&TokenKind::RParen) {
                    return Err(syntax(cur.location(), "expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(syntax(loc, "expected a generator, scalar or `(`")),
        }
    }

    fn ident(&self, name: &str, loc: (usize, usize)) -> Result<Terms, ParseError> {
        if name == "t" {
            return self.letter(Letter::T, loc);
        }
        let (head, digits) = name.split_at(1);
        let index = digits.parse::<usize>().ok().filter(|_| !digits.is_empty());
        let letter = match (head, index) {
            ("s", Some(i)) => Some(Letter::S(i)),
            ("J", Some(k)) => Some(Letter::J(k)),
            ("T", Some(k)) => Some(Letter::TK(k)),
            ("L", Some(k)) => Some(Letter::LK(k)),
            _ => None,
        };
        if let Some(l) = letter {
            return self.letter(l, loc);
        }
        match self.vt.lookup(name) {
            Ok(v) => Ok(self.scalar(Polynomial::var(self.m, v))),
            Err(_) => Err(syntax(
                loc,
                &format!("unknown symbol `{name}` for m = {}", self.m),
            )),
        }
    }

    fn letter(&self, l: Letter, (line, col): (usize, usize)) -> Result<Terms, ParseError> {
        GenWord::new(self.m, self.n, vec![l]).map_err(|source| ParseError::Range {
            line,
            col,
            source,
        })?;
        Ok(vec![(Polynomial::one(self.m), vec![l])])
    }
}

use super::{CoeffError, Polynomial, Rational, VarTable};
use num_bigint::BigInt;

/// Token kinds shared by the polynomial and algebra expression grammars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// One-based line and column of the first character.
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub found: char,
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, LexError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = (line, col);
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Token { kind, line, col });
            i += 1;
            col += 1;
        } else if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            i += 1;
            col += 1;
        } else if c.is_ascii_digit() {
            let begin = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[begin..i].iter().collect();
            col += i - begin;
            out.push(Token {
                kind: TokenKind::Int(digits.parse().unwrap()),
                line: start.0,
                col: start.1,
            });
        } else if c.is_ascii_alphabetic() {
            let begin = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            col += i - begin;
            out.push(Token {
                kind: TokenKind::Ident(chars[begin..i].iter().collect()),
                line: start.0,
                col: start.1,
            });
        } else {
            return Err(LexError {
                line,
                col,
                found: c,
            });
        }
    }
    Ok(out)
}

/// Recursive-descent cursor over a token stream.
pub struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: (usize, usize),
}

impl<'a> Cursor<'a> {
    pub fn new(tokens: &'a [Token], text: &str) -> Self {
        let last_line = text.lines().count().max(1);
        let last_col = text.lines().last().map_or(0, |l| l.chars().count()) + 1;
        Cursor {
            tokens,
            pos: 0,
            end: (last_line, last_col),
        }
    }

    pub fn peek(&self) -> Option<&'a TokenKind> {
        self.tokens.get(self.pos).map(|t| &t.kind)
    }

    pub fn advance(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek() == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Position of the next token, or just past the end of input.
    pub fn location(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.col))
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    /// Parse `int ['/' int]` when the next token is an integer.
    pub fn rational_literal(&mut self) -> Option<Result<Rational, (usize, usize)>> {
        let TokenKind::Int(num) = self.peek()? else {
            return None;
        };
        self.pos += 1;
        if self.peek() == Some(&TokenKind::Slash) {
            self.pos += 1;
            let loc = self.location();
            match self.advance().map(|t| &t.kind) {
                Some(TokenKind::Int(den)) if *den != BigInt::from(0) => {
                    Some(Ok(Rational::new(num.clone(), den.clone())))
                }
                _ => Some(Err(loc)),
            }
        } else {
            Some(Ok(Rational::from_integer(num.clone())))
        }
    }

    /// Parse `'^' uint` if present.
    pub fn exponent(&mut self) -> Result<Option<usize>, (usize, usize)> {
        if !self.eat(&TokenKind::Caret) {
            return Ok(None);
        }
        let loc = self.location();
        match self.advance().map(|t| &t.kind) {
            Some(TokenKind::Int(k)) => usize::try_from(k).map(Some).map_err(|_| loc),
            _ => Err(loc),
        }
    }
}

/// Parse canonical (or hand-written) polynomial text over `vt`.
pub fn parse_polynomial(text: &str, vt: VarTable) -> Result<Polynomial, CoeffError> {
    let tokens = tokenize(text).map_err(|e| CoeffError::Parse {
        pos: e.col,
        msg: format!("unexpected character `{}`", e.found),
    })?;
    let mut cur = Cursor::new(&tokens, text);
    let p = PolyParser { vt }.expr(&mut cur)?;
    if !cur.at_end() {
        return Err(error_at(cur.location(), "unexpected trailing input"));
    }
    Ok(p)
}

fn error_at(loc: (usize, usize), msg: &str) -> CoeffError {
    CoeffError::Parse {
        pos: loc.1,
        msg: msg.to_string(),
    }
}

struct PolyParser {
    vt: VarTable,
}

impl PolyParser {
    fn expr(&self, cur: &mut Cursor) -> Result<Polynomial, CoeffError> {
        let mut acc = Polynomial::zero(self.vt.m());
        let mut negate = false;
        if cur.eat(&TokenKind::Minus) {
            negate = true;
        } else {
            cur.eat(&TokenKind::Plus);
        }
        loop {
            let t = self.term(cur)?;
            acc = if negate { acc - t } else { acc + t };
            if cur.eat(&TokenKind::Plus) {
                negate = false;
            } else if cur.eat(&TokenKind::Minus) {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, cur: &mut Cursor) -> Result<Polynomial, CoeffError> {
        let mut acc = self.factor(cur)?;
        while cur.eat(&TokenKind::Star) {
            acc = acc * self.factor(cur)?;
        }
        Ok(acc)
    }

    fn factor(&self, cur: &mut Cursor) -> Result<Polynomial, CoeffError> {
        if cur.eat(&TokenKind::Minus) {
            return Ok(-self.factor(cur)?);
        }
        let base = self.atom(cur)?;
        match cur.exponent() {
            Ok(Some(k)) => Ok(base.pow(k)),
            Ok(None) => Ok(base),
            Err(loc) => Err(error_at(loc, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&self, cur: &mut Cursor) -> Result<Polynomial, CoeffError> {
        let m = self.vt.m();
        if let Some(r) = cur.rational_literal() {
            return r
                .map(|c| Polynomial::constant(m, c))
                .map_err(|loc| error_at(loc, "expected a nonzero denominator"));
        }
        let loc = cur.location();
        match cur.advance().map(|t| &t.kind) {
            Some(TokenKind::Ident(name)) => {
                let v = self.vt.lookup(name).map_err(|_| {
                    error_at(loc, &format!("unknown variable `{name}` for m = {m}"))
                })?;
                Ok(Polynomial::var(m, v))
            }
            Some(TokenKind::LParen) => {
                let inner = self.expr(cur)?;
                if !cur.eat(&TokenKind::RParen) {
                    return Err(error_at(cur.location(), "expected `)`"));
                }
                Ok(inner)
            }
            _ => Err(error_at(loc, "expected a number, variable or `(`")),
        }
    }
}

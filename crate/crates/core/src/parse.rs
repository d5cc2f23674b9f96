//! Text syntax for polynomials: terms like `3*x1^2*y2 - 1/2*z3` over the
//! ring's declared variable names.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src,
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self, c: char) {
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>> {
        let mut out = Vec::new();
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.bump(c);
                continue;
            }
            let (line, col) = (self.line, self.col);
            let tok = match c {
                '+' => {
                    self.bump(c);
                    Tok::Plus
                }
                '-' => {
                    self.bump(c);
                    Tok::Minus
                }
                '*' => {
                    self.bump(c);
                    Tok::Star
                }
                '^' => {
                    self.bump(c);
                    Tok::Caret
                }
                '/' => {
                    self.bump(c);
                    Tok::Slash
                }
                d if d.is_ascii_digit() => {
                    let start = self.pos;
                    while let Some(c2) = self.src[self.pos..].chars().next() {
                        if c2.is_ascii_digit() {
                            self.bump(c2);
                        } else {
                            break;
                        }
                    }
                    let text = &self.src[start..self.pos];
                    Tok::Num(text.parse::<BigInt>().expect("digits parse as integer"))
                }
                a if a.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while let Some(c2) = self.src[self.pos..].chars().next() {
                        if c2.is_ascii_alphanumeric() || c2 == '_' {
                            self.bump(c2);
                        } else {
                            break;
                        }
                    }
                    Tok::Ident(self.src[start..self.pos].to_string())
                }
                other => return Err(self.error(format!("unexpected character `{other}`"))),
            };
            out.push(Spanned { tok, line, col });
        }
        Ok(out)
    }
}

struct Parser<'r> {
    ring: &'r Ring,
    toks: Vec<Spanned>,
    idx: usize,
    end_line: usize,
    end_col: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|s| &s.tok)
    }

    fn next(&mut self) -> Option<Spanned> {
        let s = self.toks.get(self.idx).cloned();
        if s.is_some() {
            self.idx += 1;
        }
        s
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.idx)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn error_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn parse(&mut self) -> Result<Polynomial> {
        let mut terms: Vec<(Monomial, Scalar)> = Vec::new();
        let mut sign = 1i64;
        // optional leading sign
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.idx += 1;
            }
            Some(Tok::Plus) => {
                self.idx += 1;
            }
            None => return Err(self.error_here("empty polynomial")),
            _ => {}
        }
        loop {
            let (m, c) = self.term(sign)?;
            terms.push((m, c));
            match self.next() {
                None => break,
                Some(s) => match s.tok {
                    Tok::Plus => sign = 1,
                    Tok::Minus => sign = -1,
                    _ => {
                        return Err(Error::Parse {
                            line: s.line,
                            col: s.col,
                            msg: "expected `+` or `-` between terms".into(),
                        })
                    }
                },
            }
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn term(&mut self, sign: i64) -> Result<(Monomial, Scalar)> {
        let field = self.ring.field();
        let mut coeff = field.from_i64(sign);
        let mut exps = vec![0u32; self.ring.arity()];
        loop {
            match self.next() {
                None => return Err(self.error_here("expected a term")),
                Some(s) => match s.tok {
                    Tok::Num(n) => {
                        // optional denominator
                        let c = if matches!(self.peek(), Some(Tok::Slash)) {
                            self.idx += 1;
                            match self.next() {
                                Some(Spanned {
                                    tok: Tok::Num(d),
                                    line,
                                    col,
                                }) => field.fraction(&n, &d).map_err(|e| Error::Parse {
                                    line,
                                    col,
                                    msg: e.to_string(),
                                })?,
                                other => {
                                    let (line, col) = other
                                        .map(|s| (s.line, s.col))
                                        .unwrap_or((self.end_line, self.end_col));
                                    return Err(Error::Parse {
                                        line,
                                        col,
                                        msg: "expected denominator after `/`".into(),
                                    });
                                }
                            }
                        } else {
                            field.from_bigint(&n)
                        };
                        coeff = field.mul(&coeff, &c);
                    }
                    Tok::Ident(name) => {
                        let var = self.ring.var_index(&name).ok_or(Error::Parse {
                            line: s.line,
                            col: s.col,
                            msg: format!("unknown variable `{name}`"),
                        })?;
                        let e = if matches!(self.peek(), Some(Tok::Caret)) {
                            self.idx += 1;
                            match self.next() {
                                Some(Spanned {
                                    tok: Tok::Num(n),
                                    line,
                                    col,
                                }) => u32::try_from(&n).map_err(|_| Error::Parse {
                                    line,
                                    col,
                                    msg: "exponent out of range".into(),
                                })?,
                                other => {
                                    let (line, col) = other
                                        .map(|s| (s.line, s.col))
                                        .unwrap_or((self.end_line, self.end_col));
                                    return Err(Error::Parse {
                                        line,
                                        col,
                                        msg: "expected exponent after `^`".into(),
                                    });
                                }
                            }
                        } else {
                            1
                        };
                        exps[var] += e;
                    }
                    _ => {
                        return Err(Error::Parse {
                            line: s.line,
                            col: s.col,
                            msg: "expected a number or variable".into(),
                        })
                    }
                },
            }
            if matches!(self.peek(), Some(Tok::Star)) {
                self.idx += 1;
                continue;
            }
            break;
        }
        Ok((Monomial::from_exps(exps), coeff))
    }
}

/// Parses a polynomial in the ring's variables. Reports the line and
/// column of the first offending token on failure.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let toks = Lexer::new(src).tokens()?;
    let end_line = src.lines().count().max(1);
    let end_col = src.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1);
    let mut parser = Parser {
        ring,
        toks,
        idx: 0,
        end_line,
        end_col,
    };
    parser.parse()
}

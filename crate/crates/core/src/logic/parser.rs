//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! term    := var | const | term + term | const * term | V(term) | (term)
//! atom    := term = term | term < term | term <= term | term != term
//! formula := atom | !f | f & f | f | f | f -> f | f <-> f | A x f | E x f | (f)
//! ```
//!
//! Precedence from tightest: `!`, `&`, `|`, `->` (right associative), `<->`;
//! a quantifier body extends as far to the right as possible.

use super::ast::{Formula, Term};
use crate::error::{Error, Result};
use crate::numeral::Natural;

/// Largest `c` accepted in `c * t`, which expands to a `c`-fold sum.
const MAX_MULTIPLIER: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(Natural),
    Plus,
    Star,
    Eq,
    Lt,
    Le,
    Ne,
    Bang,
    Amp,
    Bar,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Num(n) => format!("`{n}`"),
        Tok::End => "end of input".into(),
        other => format!("{other:?}"),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let (tok, width) = if c.is_ascii_alphabetic() || c == b'_' {
            let len = rest
                .bytes()
                .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                .count();
            (Tok::Ident(rest[..len].to_string()), len)
        } else if c.is_ascii_digit() {
            let len = rest.bytes().take_while(u8::is_ascii_digit).count();
            let n: Natural = rest[..len].parse().expect("decimal digits");
            (Tok::Num(n), len)
        } else if rest.starts_with("<->") {
            (Tok::DoubleArrow, 3)
        } else if rest.starts_with("<=") {
            (Tok::Le, 2)
        } else if rest.starts_with("->") {
            (Tok::Arrow, 2)
        } else if rest.starts_with("!=") {
            (Tok::Ne, 2)
        } else {
            let tok = match c {
                b'+' => Tok::Plus,
                b'*' => Tok::Star,
                b'=' => Tok::Eq,
                b'<' => Tok::Lt,
                b'!' => Tok::Bang,
                b'&' => Tok::Amp,
                b'|' => Tok::Bar,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                _ => {
                    let ch = rest.chars().next().unwrap();
                    return Err(Error::Parse { pos: start, msg: format!("unexpected character `{ch}`") });
                }
            };
            (tok, 1)
        };
        out.push((tok, start));
        i += width;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    fresh: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {}, found {}", describe(&tok), describe(self.peek())))
        }
    }

    fn fresh_var(&mut self) -> String {
        let name = format!("_d{}", self.fresh);
        self.fresh += 1;
        name
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut left = self.implication()?;
        while *self.peek() == Tok::DoubleArrow {
            self.bump();
            let right = self.implication()?;
            left = Formula::iff(left, right);
        }
        Ok(left)
    }

    fn implication(&mut self) -> Result<Formula> {
        let left = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let right = self.implication()?;
            return Ok(Formula::implies(left, right));
        }
        Ok(left)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut left = self.conjunction()?;
        while *self.peek() == Tok::Bar {
            self.bump();
            let right = self.conjunction()?;
            left = Formula::or(left, right);
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let right = self.unary()?;
            left = Formula::and(left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(q) if (q == "A" || q == "E") && matches!(self.peek_at(1), Tok::Ident(_)) => {
                self.bump();
                let Tok::Ident(var) = self.bump() else { unreachable!() };
                let body = self.formula()?;
                Ok(if q == "A" { Formula::forall(var, body) } else { Formula::exists(var, body) })
            }
            Tok::LParen => {
                // Either a parenthesized formula or an atom whose first term
                // is parenthesized; try the formula reading first.
                let saved = (self.pos, self.fresh);
                self.bump();
                let attempt = self.formula().and_then(|f| {
                    self.expect(Tok::RParen)?;
                    Ok(f)
                });
                let continues_term = matches!(
                    self.peek(),
                    Tok::Plus | Tok::Eq | Tok::Lt | Tok::Le | Tok::Ne | Tok::Star
                );
                match attempt {
                    Ok(f) if !continues_term => Ok(f),
                    first => {
                        (self.pos, self.fresh) = saved;
                        self.atom().map_err(|e| match (first, e) {
                            // report whichever reading got further
                            (Err(Error::Parse { pos, msg }), Error::Parse { pos: p2, .. }) if pos > p2 => {
                                Error::Parse { pos, msg }
                            }
                            (_, e) => e,
                        })
                    }
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        let left = self.term()?;
        let op = self.peek().clone();
        match op {
            Tok::Eq | Tok::Lt | Tok::Le | Tok::Ne => {
                self.bump();
            }
            other => return self.error(format!("expected comparison, found {}", describe(&other))),
        }
        let right = self.term()?;
        Ok(match op {
            Tok::Eq => Formula::eq(left, right),
            Tok::Ne => Formula::not(Formula::eq(left, right)),
            Tok::Le => {
                let d = self.fresh_var();
                Formula::exists(d.clone(), Formula::eq(Term::sum(left, Term::var(d)), right))
            }
            Tok::Lt => {
                let d = self.fresh_var();
                Formula::exists(
                    d.clone(),
                    Formula::and(
                        Formula::eq(Term::sum(left, Term::var(d.clone())), right),
                        Formula::not(Formula::eq(Term::var(d), Term::constant(0))),
                    ),
                )
            }
            _ => unreachable!(),
        })
    }

    fn term(&mut self) -> Result<Term> {
        let mut left = self.product()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let right = self.product()?;
            left = Term::sum(left, right);
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Num(n) => {
                let at = self.offset();
                self.bump();
                if *self.peek() != Tok::Star {
                    return Ok(Term::Const(n));
                }
                self.bump();
                let factor = self.primary()?;
                let k = u64::try_from(&n)
                    .ok()
                    .filter(|&k| k <= MAX_MULTIPLIER)
                    .ok_or_else(|| Error::Parse { pos: at, msg: format!("multiplier {n} too large") })?;
                Ok(match k {
                    0 => Term::constant(0),
                    _ => (1..k).fold(factor.clone(), |acc, _| Term::sum(acc, factor.clone())),
                })
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Ident(v) if v == "V" && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Term::val(inner))
            }
            Tok::Ident(v) => {
                self.bump();
                Ok(Term::Var(v))
            }
            Tok::Num(n) => {
                self.bump();
                Ok(Term::Const(n))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            other => self.error(format!("expected term, found {}", describe(&other))),
        }
    }
}

/// Parses a formula, desugaring `<`, `<=`, `!=` and numeric multiples.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser { toks: lex(text)?, pos: 0, fresh: 0 };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", describe(p.peek())));
    }
    Ok(f)
}

//! Recursive-descent parser for the ASCII formula and term syntax.
//!
//! Formulas: `p`, `top`, `bot`, `(A /\ B)`, `(A \/ B)`; the outermost pair of
//! parentheses may be dropped. Terms: `id<A>`, `hw<A>`, `cw<A>`, `hk1<A,B>`,
//! `hk2<A,B>`, `ck1<A,B>`, `ck2<A,B>`, `hkap<A>`, `ckap<A>`, `g . f`,
//! `(f /\ g)`, `(f \/ g)`, `pair(f,g)`, `copair(f,g)`, `HK1<A>(f)`, `HK2<A>(f)`,
//! `CK1<A>(f)`, `CK2<A>(f)`, and `( t )` for grouping.

use thiserror::Error;

use crate::formulas::{Connective, Formula, Side};
use crate::terms::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LAngle,
    RAngle,
    LParen,
    RParen,
    Comma,
    Dot,
    And,
    Or,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '<' => Tok::LAngle,
            '>' => Tok::RAngle,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '/' if bytes.get(i + 1) == Some(&b'\\') => {
                out.push((i, Tok::And));
                i += 2;
                continue;
            }
            '\\' if bytes.get(i + 1) == Some(&b'/') => {
                out.push((i, Tok::Or));
                i += 2;
                continue;
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_' || bytes[i] == b'\'') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
                continue;
            }
            other => {
                return Err(ParseError {
                    pos: i,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            pos: 0,
            end: input.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {}", describe(&tok)))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.error("trailing input")
        }
    }

    fn connective(&mut self) -> Option<Connective> {
        let conn = match self.peek()? {
            Tok::And => Connective::Conj,
            Tok::Or => Connective::Disj,
            _ => return None,
        };
        self.pos += 1;
        Some(conn)
    }

    /// A formula with optional outer parentheses: `A` or `A op B`.
    fn formula_top(&mut self) -> Result<Formula, ParseError> {
        let left = self.formula_atom()?;
        match self.connective() {
            Some(conn) => {
                let right = self.formula_atom()?;
                if matches!(self.peek(), Some(Tok::And | Tok::Or)) {
                    return self.error("chained connectives need parentheses");
                }
                Ok(Formula::binary(conn, left, right))
            }
            None => Ok(left),
        }
    }

    fn formula_atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if !name.chars().next().is_some_and(|c| c.is_ascii_lowercase()) {
                    return self.error(format!("letters are lowercase identifiers, got {name:?}"));
                }
                self.pos += 1;
                Ok(match name.as_str() {
                    "top" => Formula::Top,
                    "bot" => Formula::Bot,
                    _ => Formula::letter(&name),
                })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.formula_top()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => self.error("expected a formula"),
        }
    }

    fn angle_formulas(&mut self, count: usize) -> Result<Vec<Formula>, ParseError> {
        self.expect(Tok::LAngle)?;
        let mut out = vec![self.formula_top()?];
        for _ in 1..count {
            self.expect(Tok::Comma)?;
            out.push(self.formula_top()?);
        }
        self.expect(Tok::RAngle)?;
        Ok(out)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let first = self.term_primary()?;
        if self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            let rest = self.term()?;
            Ok(Term::comp(first, rest))
        } else {
            Ok(first)
        }
    }

    fn term_primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let left = self.term()?;
                let term = match self.connective() {
                    Some(conn) => {
                        let right = self.term()?;
                        match conn {
                            Connective::Conj => Term::conj(left, right),
                            Connective::Disj => Term::disj(left, right),
                        }
                    }
                    None => left,
                };
                self.expect(Tok::RParen)?;
                Ok(term)
            }
            Some(Tok::Ident(name)) => {
                if self.peek_at(1) != Some(&Tok::LAngle) && self.peek_at(1) != Some(&Tok::LParen) {
                    return self.error(format!("unknown term constructor {name:?}"));
                }
                self.pos += 1;
                self.constructor(&name)
            }
            _ => self.error("expected a term"),
        }
    }

    fn constructor(&mut self, name: &str) -> Result<Term, ParseError> {
        let one = |p: &mut Parser| p.angle_formulas(1).map(|mut v| v.remove(0));
        let two = |p: &mut Parser| {
            p.angle_formulas(2).map(|mut v| {
                let b = v.pop().unwrap();
                (v.pop().unwrap(), b)
            })
        };
        Ok(match name {
            "id" => Term::Id(one(self)?),
            "hw" => Term::Hw(one(self)?),
            "cw" => Term::Cw(one(self)?),
            "hkap" => Term::Hkappa(one(self)?),
            "ckap" => Term::Ckappa(one(self)?),
            "hk1" | "hk2" | "ck1" | "ck2" => {
                let side = if name.ends_with('1') { Side::Left } else { Side::Right };
                let (a, b) = two(self)?;
                if name.starts_with('h') {
                    Term::Hk(side, a, b)
                } else {
                    Term::Ck(side, a, b)
                }
            }
            "pair" | "copair" => {
                self.expect(Tok::LParen)?;
                let left = self.term()?;
                self.expect(Tok::Comma)?;
                let right = self.term()?;
                self.expect(Tok::RParen)?;
                if name == "pair" {
                    Term::pair(left, right)
                } else {
                    Term::copair(left, right)
                }
            }
            "HK1" | "HK2" | "CK1" | "CK2" => {
                let side = if name.ends_with('1') { Side::Left } else { Side::Right };
                let other = one(self)?;
                self.expect(Tok::LParen)?;
                let body = self.term()?;
                self.expect(Tok::RParen)?;
                if name.starts_with('H') {
                    Term::hproj(side, other, body)
                } else {
                    Term::cinj(side, other, body)
                }
            }
            _ => {
                self.pos -= 1;
                return self.error(format!("unknown term constructor {name:?}"));
            }
        })
    }
}

fn describe(tok: &Tok) -> &'static str {
    match tok {
        Tok::Ident(_) => "an identifier",
        Tok::LAngle => "'<'",
        Tok::RAngle => "'>'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::Comma => "','",
        Tok::Dot => "'.'",
        Tok::And => "'/\\'",
        Tok::Or => "'\\/'",
    }
}

pub fn parse_formula(input: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(input)?;
    let f = p.formula_top()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(input)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

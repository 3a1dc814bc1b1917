//! Boolean expressions over structural properties, e.g.
//! `strong-somp & !orthomodular`.
//!
//! Precedence from loosest to tightest: `|`, `&`, `!`. Atoms are property
//! names accepted by [`Property::parse`].

use std::collections::BTreeSet;
use std::fmt;

use crate::checks::{Checker, Property};
use crate::error::{Error, Result};
use crate::ortho::OrthoPoset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(Property),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Name(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '!' | '&' | '|' | '(' | ')' => {
                chars.next();
                out.push(match c {
                    '!' => Token::Not,
                    '&' => Token::And,
                    '|' => Token::Or,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            c if c.is_alphanumeric() || c == '_' || c == '-' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '-' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Name(name));
            }
            other => return Err(Error::Expression(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or(&mut self) -> Result<Expr> {
        let mut lhs = self.and()?;
        while self.eat(&Token::Or) {
            lhs = Expr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            lhs = Expr::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Token::Not) {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        if self.eat(&Token::Open) {
            let e = self.or()?;
            if !self.eat(&Token::Close) {
                return Err(Error::Expression("missing `)`".into()));
            }
            return Ok(e);
        }
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Name(n)) => {
                self.pos += 1;
                Property::parse(&n)
                    .map(Expr::Atom)
                    .ok_or_else(|| Error::Expression(format!("unknown property {n:?}")))
            }
            Some(t) => Err(Error::Expression(format!("unexpected token {t:?}"))),
            None => Err(Error::Expression("unexpected end of expression".into())),
        }
    }
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser {
            tokens: tokenize(s)?,
            pos: 0,
        };
        let e = p.or()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Expression(format!("trailing input after token {}", p.pos)));
        }
        Ok(e)
    }

    /// Properties mentioned, in a fixed order.
    pub fn atoms(&self) -> BTreeSet<Property> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<Property>) {
        match self {
            Expr::Atom(p) => {
                out.insert(*p);
            }
            Expr::Not(e) => e.collect(out),
            Expr::And(a, b) | Expr::Or(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// Evaluates against an oracle for the atoms.
    pub fn eval_with(&self, atom: &mut impl FnMut(Property) -> Result<bool>) -> Result<bool> {
        Ok(match self {
            Expr::Atom(p) => atom(*p)?,
            Expr::Not(e) => !e.eval_with(atom)?,
            Expr::And(a, b) => a.eval_with(atom)? && b.eval_with(atom)?,
            Expr::Or(a, b) => a.eval_with(atom)? || b.eval_with(atom)?,
        })
    }

    /// Evaluates on `o` with each property checked in its default mode.
    pub fn eval(&self, o: &OrthoPoset) -> Result<bool> {
        let checker = Checker::new(o);
        self.eval_with(&mut |p| Ok(checker.check(p)?.holds))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Atom(p) => write!(f, "{p}"),
            Expr::Not(e) => write!(f, "!{e}"),
            Expr::And(a, b) => write!(f, "({a} & {b})"),
            Expr::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

//! Text syntax for polynomials.
//!
//! The printer emits `term (('+'|'-') term)*` with terms of the form
//! `coeff*x*y^2`. The reader accepts that plus the usual conveniences:
//! parentheses, unary minus, decimals and division by nonzero constants, so
//! `(1 - x)/2` and `0.5 - 0.5*x` read the same.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{parse_rational, Polynomial, VarArena};
use crate::error::{Error, Result};

type Poly = Polynomial<BigRational>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            out.push((Tok::Num(text[start..i].to_string()), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i));
            i += 1;
        } else {
            return Err(Error::parse(1, i + 1, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    arena: &'a Arc<VarArena>,
}

impl Parser<'_> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1) + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(1, self.col(), msg)
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some((Tok::Op(c), _)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                match rhs.constant_value() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(BigRational::one() / c)),
                    Some(_) => return Err(self.err("division by zero")),
                    None => return Err(self.err("division by a non-constant polynomial")),
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((Tok::Num(n), _)) => {
                    let e: u32 = n.parse().map_err(|_| self.err("exponent must be a small non-negative integer"))?;
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let Some((tok, _)) = self.toks.get(self.pos).cloned() else {
            return Err(self.err("unexpected end of input"));
        };
        match tok {
            Tok::Num(n) => {
                let c = parse_rational(&n).ok_or_else(|| self.err(format!("bad number `{n}`")))?;
                self.pos += 1;
                Ok(Polynomial::constant(self.arena, c))
            }
            Tok::Ident(name) => {
                let p = Polynomial::var_named(self.arena, &name)?;
                self.pos += 1;
                Ok(p)
            }
            Tok::Op('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Tok::Op(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }
}

impl Polynomial<BigRational> {
    /// Parse over an existing arena; unknown identifiers are errors.
    pub fn parse(arena: &Arc<VarArena>, text: &str) -> Result<Self> {
        let toks = lex(text)?;
        if toks.is_empty() {
            return Err(Error::parse(1, 1, "empty polynomial"));
        }
        let mut p = Parser {
            toks,
            pos: 0,
            end: text.len(),
            arena,
        };
        let poly = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(p.err("trailing input"));
        }
        Ok(poly)
    }

    /// Identifiers in order of first appearance.
    pub fn identifiers(text: &str) -> Result<Vec<String>> {
        let mut out: Vec<String> = Vec::new();
        for (t, _) in lex(text)? {
            if let Tok::Ident(name) = t {
                if !out.contains(&name) {
                    out.push(name);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arena() -> Arc<VarArena> {
        VarArena::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn reads_printed_form() {
        let a = arena();
        let p = Poly::parse(&a, "1/2 + 3/4*x*y^2 - z").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.to_string(), "3/4*x*y^2 - z + 1/2");
        assert_eq!(Poly::parse(&a, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn conveniences() {
        let a = arena();
        let p = Poly::parse(&a, "(1 - x)/2").unwrap();
        let q = Poly::parse(&a, "0.5 - 0.5*x").unwrap();
        assert_eq!(p, q);
        assert_eq!(Poly::parse(&a, "-x").unwrap().to_string(), "-x");
        assert_eq!(Poly::parse(&a, "(x+1)^2").unwrap().to_string(), "x^2 + 2*x + 1");
    }

    #[test]
    fn errors() {
        let a = arena();
        assert!(matches!(Poly::parse(&a, "w + 1"), Err(Error::UnknownVariable(v)) if v == "w"));
        assert!(matches!(Poly::parse(&a, "x +"), Err(Error::Parse { .. })));
        assert!(matches!(Poly::parse(&a, "x / y"), Err(Error::Parse { .. })));
        assert!(matches!(Poly::parse(&a, "x $"), Err(Error::Parse { col: 3, .. })));
    }
}

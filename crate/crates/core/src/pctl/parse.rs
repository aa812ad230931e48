use num_traits::{One, Zero};

use super::ast::{Ast, PathAst, TermAst};
use crate::error::{Error, Result};
use crate::poly::parse_rational;
use crate::realdec::Rel;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Str(String),
    Word(String),
    Num(Rational),
    Rel(Rel),
    Sym(char),
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str) -> Result<Lexed> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let start = i + 1;
            let end = (start..chars.len())
                .find(|&j| chars[j] == '"')
                .ok_or_else(|| Error::parse(1, col, "unterminated label"))?;
            toks.push((Tok::Str(chars[start..end].iter().collect()), col));
            i = end + 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Word(chars[start..i].iter().collect()), col));
        } else if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let start = i;
            i += 1;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.' || chars[i] == '/') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let q = parse_rational(&s).ok_or_else(|| Error::parse(1, col, format!("bad number `{s}`")))?;
            toks.push((Tok::Num(q), col));
        } else if matches!(c, '<' | '>' | '=') {
            let two = chars.get(i + 1) == Some(&'=') && c != '=';
            let sym: String = chars[i..i + if two { 2 } else { 1 }].iter().collect();
            toks.push((Tok::Rel(sym.parse()?), col));
            i += sym.len();
        } else if matches!(c, '[' | ']' | '(' | ')' | '!' | '&' | '|') {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::parse(1, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(Lexed {
        toks,
        end: chars.len() + 1,
    })
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(1, self.col(), msg))
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Some(Tok::Word(x)) if x == w)
    }

    fn rel(&mut self) -> Result<Rel> {
        match self.peek() {
            Some(Tok::Rel(r)) => {
                let r = *r;
                self.pos += 1;
                Ok(r)
            }
            _ => self.err("expected a relation"),
        }
    }

    fn number(&mut self) -> Result<Rational> {
        match self.peek() {
            Some(Tok::Num(q)) => {
                let q = q.clone();
                self.pos += 1;
                Ok(q)
            }
            _ => self.err("expected a number"),
        }
    }

    fn state(&mut self) -> Result<Ast> {
        let mut lhs = self.conj()?;
        while self.eat_sym('|') {
            lhs = Ast::Or(Box::new(lhs), Box::new(self.conj()?));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while self.eat_sym('&') {
            lhs = Ast::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat_sym('!') {
            return Ok(Ast::Not(Box::new(self.unary()?)));
        }
        let col = self.col();
        match self.next() {
            Some(Tok::Str(a)) => Ok(Ast::Atom(a)),
            Some(Tok::Sym('(')) => {
                let a = self.state()?;
                self.expect_sym(')')?;
                Ok(a)
            }
            Some(Tok::Word(w)) => match w.as_str() {
                "true" => Ok(Ast::True),
                "false" => Ok(Ast::False),
                "P" => {
                    let rel = self.rel()?;
                    let at = self.col();
                    let bound = self.number()?;
                    if bound < Rational::zero() || bound > Rational::one() {
                        return Err(Error::parse(1, at, format!("probability bound {bound} outside [0, 1]")));
                    }
                    self.expect_sym('[')?;
                    let path = self.path()?;
                    self.expect_sym(']')?;
                    Ok(Ast::Prob { rel, bound, path })
                }
                "E" => {
                    let rel = self.rel()?;
                    let bound = self.number()?;
                    self.expect_sym('[')?;
                    let term = self.term()?;
                    self.expect_sym(']')?;
                    Ok(Ast::Exp { rel, bound, term })
                }
                "CP" => {
                    self.expect_sym('[')?;
                    let lhs = self.path()?;
                    let rel = self.rel()?;
                    let rhs = self.path()?;
                    self.expect_sym(']')?;
                    Ok(Ast::CmpProb { lhs, rel, rhs })
                }
                "CE" => {
                    self.expect_sym('[')?;
                    let lhs = self.term()?;
                    let rel = self.rel()?;
                    let rhs = self.term()?;
                    self.expect_sym(']')?;
                    Ok(Ast::CmpExp { lhs, rel, rhs })
                }
                _ => Err(Error::parse(1, col, format!("unexpected `{w}`"))),
            },
            Some(t) => Err(Error::parse(1, col, format!("unexpected {t:?}"))),
            None => Err(Error::parse(1, col, "unexpected end of formula")),
        }
    }

    fn path(&mut self) -> Result<PathAst> {
        for (w, make) in [
            ("X", PathAst::Next as fn(Box<Ast>) -> PathAst),
            ("F", PathAst::Eventually),
            ("G", PathAst::Globally),
        ] {
            if self.is_word(w) {
                self.pos += 1;
                return Ok(make(Box::new(self.unary()?)));
            }
        }
        let lhs = Box::new(self.unary()?);
        if self.is_word("U") {
            self.pos += 1;
            Ok(PathAst::Until(lhs, Box::new(self.unary()?)))
        } else if self.is_word("R") {
            self.pos += 1;
            Ok(PathAst::Release(lhs, Box::new(self.unary()?)))
        } else {
            self.err("expected `U` or `R`")
        }
    }

    fn term(&mut self) -> Result<TermAst> {
        if self.is_word("C") {
            self.pos += 1;
            return Ok(TermAst::Acc(Box::new(self.unary()?)));
        }
        if self.is_word("MP") {
            self.pos += 1;
            self.expect_sym('(')?;
            let a = self.state()?;
            self.expect_sym(')')?;
            return Ok(TermAst::MeanPayoff(Box::new(a)));
        }
        self.err("expected `C` or `MP`")
    }
}

/// Parses the surface syntax into an [`Ast`].
pub fn parse_ast(text: &str) -> Result<Ast> {
    let Lexed { toks, end } = lex(text)?;
    let mut p = Parser { toks, pos: 0, end };
    let a = p.state()?;
    if p.pos < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(a)
}

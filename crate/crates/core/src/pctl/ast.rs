use std::fmt;

use crate::realdec::Rel;
use crate::Rational;

/// Formula as written, before desugaring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ast {
    True,
    False,
    Atom(String),
    Not(Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    Prob { rel: Rel, bound: Rational, path: PathAst },
    Exp { rel: Rel, bound: Rational, term: TermAst },
    CmpProb { lhs: PathAst, rel: Rel, rhs: PathAst },
    CmpExp { lhs: TermAst, rel: Rel, rhs: TermAst },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PathAst {
    Next(Box<Ast>),
    Until(Box<Ast>, Box<Ast>),
    Eventually(Box<Ast>),
    Globally(Box<Ast>),
    Release(Box<Ast>, Box<Ast>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermAst {
    /// Weight accumulated until the first visit to a state satisfying the operand.
    Acc(Box<Ast>),
    /// Long-run average weight collected in states satisfying the operand.
    MeanPayoff(Box<Ast>),
}

impl Ast {
    /// True when some probability, expectation or comparison operator has
    /// another one among its operands.
    pub fn is_nested(&self) -> bool {
        fn quantitative_inside(a: &Ast) -> bool {
            match a {
                Ast::True | Ast::False | Ast::Atom(_) => false,
                Ast::Not(x) => quantitative_inside(x),
                Ast::And(x, y) | Ast::Or(x, y) => quantitative_inside(x) || quantitative_inside(y),
                _ => true,
            }
        }
        let path_nested = |p: &PathAst| p.operands().into_iter().any(quantitative_inside);
        let term_nested = |t: &TermAst| quantitative_inside(t.operand());
        match self {
            Ast::True | Ast::False | Ast::Atom(_) => false,
            Ast::Not(x) => x.is_nested(),
            Ast::And(x, y) | Ast::Or(x, y) => x.is_nested() || y.is_nested(),
            Ast::Prob { path, .. } => path_nested(path),
            Ast::Exp { term, .. } => term_nested(term),
            Ast::CmpProb { lhs, rhs, .. } => path_nested(lhs) || path_nested(rhs),
            Ast::CmpExp { lhs, rhs, .. } => term_nested(lhs) || term_nested(rhs),
        }
    }
}

impl PathAst {
    pub fn operands(&self) -> Vec<&Ast> {
        match self {
            PathAst::Next(a) | PathAst::Eventually(a) | PathAst::Globally(a) => vec![a],
            PathAst::Until(a, b) | PathAst::Release(a, b) => vec![a, b],
        }
    }
}

impl TermAst {
    pub fn operand(&self) -> &Ast {
        match self {
            TermAst::Acc(a) | TermAst::MeanPayoff(a) => a,
        }
    }
}

fn operand(f: &mut fmt::Formatter<'_>, a: &Ast) -> fmt::Result {
    match a {
        Ast::And(..) | Ast::Or(..) => write!(f, "({a})"),
        _ => write!(f, "{a}"),
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ast::True => f.write_str("true"),
            Ast::False => f.write_str("false"),
            Ast::Atom(a) => write!(f, "\"{a}\""),
            Ast::Not(a) => {
                f.write_str("!")?;
                operand(f, a)
            }
            Ast::And(a, b) => {
                operand(f, a)?;
                f.write_str(" & ")?;
                operand(f, b)
            }
            Ast::Or(a, b) => {
                operand(f, a)?;
                f.write_str(" | ")?;
                operand(f, b)
            }
            Ast::Prob { rel, bound, path } => write!(f, "P{rel}{bound} [ {path} ]"),
            Ast::Exp { rel, bound, term } => write!(f, "E{rel}{bound} [ {term} ]"),
            Ast::CmpProb { lhs, rel, rhs } => write!(f, "CP[ {lhs} {rel} {rhs} ]"),
            Ast::CmpExp { lhs, rel, rhs } => write!(f, "CE[ {lhs} {rel} {rhs} ]"),
        }
    }
}

impl fmt::Display for PathAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, op, b) = match self {
            PathAst::Next(a) => (None, "X", a),
            PathAst::Eventually(a) => (None, "F", a),
            PathAst::Globally(a) => (None, "G", a),
            PathAst::Until(a, b) => (Some(a), "U", b),
            PathAst::Release(a, b) => (Some(a), "R", b),
        };
        if let Some(a) = a {
            operand(f, a)?;
            f.write_str(" ")?;
        }
        write!(f, "{op} ")?;
        operand(f, b)
    }
}

impl fmt::Display for TermAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermAst::Acc(a) => {
                f.write_str("C ")?;
                operand(f, a)
            }
            TermAst::MeanPayoff(a) => write!(f, "MP({a})"),
        }
    }
}

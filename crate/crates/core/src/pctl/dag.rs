use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use super::ast::{Ast, PathAst, TermAst};
use super::parse::parse_ast;
use crate::error::Result;
use crate::realdec::Rel;
use crate::Rational;

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    Next(NodeId),
    Until(NodeId, NodeId),
}

impl Path {
    pub fn operands(&self) -> Vec<NodeId> {
        match *self {
            Path::Next(a) => vec![a],
            Path::Until(a, b) => vec![a, b],
        }
    }
}

/// A path formula whose probability is `Pr(path)`, or `1 - Pr(path)` when
/// `complement` is set (globally and release inside comparisons).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathRef {
    pub path: Path,
    pub complement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Acc(NodeId),
    MeanPayoff(NodeId),
}

impl Term {
    pub fn operand(&self) -> NodeId {
        match *self {
            Term::Acc(a) | Term::MeanPayoff(a) => a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    True,
    Atom(String),
    Not(NodeId),
    And(NodeId, NodeId),
    Prob { rel: Rel, bound: Rational, path: Path },
    Exp { rel: Rel, bound: Rational, term: Term },
    CmpProb { lhs: PathRef, rel: Rel, rhs: PathRef },
    CmpExp { lhs: Term, rel: Rel, rhs: Term },
}

impl Node {
    pub fn children(&self) -> Vec<NodeId> {
        match self {
            Node::True | Node::Atom(_) => Vec::new(),
            Node::Not(a) => vec![*a],
            Node::And(a, b) => vec![*a, *b],
            Node::Prob { path, .. } => path.operands(),
            Node::Exp { term, .. } => vec![term.operand()],
            Node::CmpProb { lhs, rhs, .. } => {
                let mut v = lhs.path.operands();
                v.extend(rhs.path.operands());
                v
            }
            Node::CmpExp { lhs, rhs, .. } => vec![lhs.operand(), rhs.operand()],
        }
    }

    /// Probability, expectation or comparison operator.
    pub fn is_quantitative(&self) -> bool {
        !matches!(self, Node::True | Node::Atom(_) | Node::Not(_) | Node::And(..))
    }
}

/// State formula as a DAG. Structurally equal subformulas share one node and
/// every node comes after its children.
#[derive(Clone, Debug)]
pub struct Formula {
    nodes: Vec<Node>,
    root: NodeId,
    ast: Ast,
}

#[derive(Default)]
struct Builder {
    nodes: Vec<Node>,
    index: HashMap<Node, NodeId>,
}

impl Builder {
    fn intern(&mut self, n: Node) -> NodeId {
        if let Some(&id) = self.index.get(&n) {
            return id;
        }
        let id = self.nodes.len();
        self.nodes.push(n.clone());
        self.index.insert(n, id);
        id
    }

    fn state(&mut self, a: &Ast) -> NodeId {
        match a {
            Ast::True => self.intern(Node::True),
            Ast::False => {
                let t = self.intern(Node::True);
                self.intern(Node::Not(t))
            }
            Ast::Atom(s) => self.intern(Node::Atom(s.clone())),
            Ast::Not(x) => {
                let x = self.state(x);
                self.intern(Node::Not(x))
            }
            Ast::And(x, y) => {
                let (x, y) = (self.state(x), self.state(y));
                self.intern(Node::And(x, y))
            }
            Ast::Or(x, y) => {
                let (x, y) = (self.state(x), self.state(y));
                let (nx, ny) = (self.intern(Node::Not(x)), self.intern(Node::Not(y)));
                let both = self.intern(Node::And(nx, ny));
                self.intern(Node::Not(both))
            }
            Ast::Prob { rel, bound, path } => {
                let PathRef { path, complement } = self.path(path);
                let (rel, bound) = if complement {
                    (rel.mirror(), Rational::one() - bound)
                } else {
                    (*rel, bound.clone())
                };
                self.intern(Node::Prob { rel, bound, path })
            }
            Ast::Exp { rel, bound, term } => {
                let term = self.term(term);
                self.intern(Node::Exp {
                    rel: *rel,
                    bound: bound.clone(),
                    term,
                })
            }
            Ast::CmpProb { lhs, rel, rhs } => {
                let (lhs, rhs) = (self.path(lhs), self.path(rhs));
                self.intern(Node::CmpProb { lhs, rel: *rel, rhs })
            }
            Ast::CmpExp { lhs, rel, rhs } => {
                let (lhs, rhs) = (self.term(lhs), self.term(rhs));
                self.intern(Node::CmpExp { lhs, rel: *rel, rhs })
            }
        }
    }

    fn negated(&mut self, a: &Ast) -> NodeId {
        let x = self.state(a);
        self.intern(Node::Not(x))
    }

    fn path(&mut self, p: &PathAst) -> PathRef {
        let plain = |path| PathRef {
            path,
            complement: false,
        };
        match p {
            PathAst::Next(a) => plain(Path::Next(self.state(a))),
            PathAst::Until(a, b) => {
                let (a, b) = (self.state(a), self.state(b));
                plain(Path::Until(a, b))
            }
            PathAst::Eventually(a) => {
                let t = self.intern(Node::True);
                plain(Path::Until(t, self.state(a)))
            }
            PathAst::Globally(a) => {
                let t = self.intern(Node::True);
                PathRef {
                    path: Path::Until(t, self.negated(a)),
                    complement: true,
                }
            }
            PathAst::Release(a, b) => {
                let (na, nb) = (self.negated(a), self.negated(b));
                PathRef {
                    path: Path::Until(na, nb),
                    complement: true,
                }
            }
        }
    }

    fn term(&mut self, t: &TermAst) -> Term {
        match t {
            TermAst::Acc(a) => Term::Acc(self.state(a)),
            TermAst::MeanPayoff(a) => Term::MeanPayoff(self.state(a)),
        }
    }
}

impl Formula {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_ast(&parse_ast(text)?))
    }

    pub fn from_ast(ast: &Ast) -> Self {
        let mut b = Builder::default();
        let root = b.state(ast);
        Formula {
            nodes: b.nodes,
            root,
            ast: ast.clone(),
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id]
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    /// The surface syntax this formula was built from.
    pub fn ast(&self) -> &Ast {
        &self.ast
    }

    /// Number of DAG nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn negate(&self) -> Self {
        Self::from_ast(&Ast::Not(Box::new(self.ast.clone())))
    }

    /// True when a quantitative operator has another one below it.
    pub fn is_nested(&self) -> bool {
        self.ast.is_nested()
    }

    /// Rendering of the subformula rooted at `id`, in surface syntax.
    pub fn show(&self, id: NodeId) -> String {
        Shown(self, id).to_string()
    }
}

struct Shown<'a>(&'a Formula, NodeId);

impl Shown<'_> {
    fn operand(&self, f: &mut fmt::Formatter<'_>, id: NodeId) -> fmt::Result {
        match self.0.node(id) {
            Node::And(..) => write!(f, "({})", Shown(self.0, id)),
            _ => write!(f, "{}", Shown(self.0, id)),
        }
    }

    fn path(&self, f: &mut fmt::Formatter<'_>, p: &PathRef) -> fmt::Result {
        match (&p.path, p.complement) {
            (Path::Next(a), _) => {
                f.write_str("X ")?;
                self.operand(f, *a)
            }
            (Path::Until(a, b), false) => {
                self.operand(f, *a)?;
                f.write_str(" U ")?;
                self.operand(f, *b)
            }
            (Path::Until(a, b), true) if *self.0.node(*a) == Node::True => {
                f.write_str("G ")?;
                self.negated(f, *b)
            }
            (Path::Until(a, b), true) => {
                self.negated(f, *a)?;
                f.write_str(" R ")?;
                self.negated(f, *b)
            }
        }
    }

    fn negated(&self, f: &mut fmt::Formatter<'_>, id: NodeId) -> fmt::Result {
        match self.0.node(id) {
            Node::Not(x) => self.operand(f, *x),
            _ => {
                f.write_str("!")?;
                self.operand(f, id)
            }
        }
    }

    fn term(&self, f: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
        match t {
            Term::Acc(a) => {
                f.write_str("C ")?;
                self.operand(f, *a)
            }
            Term::MeanPayoff(a) => write!(f, "MP({})", Shown(self.0, *a)),
        }
    }
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plain = |path: &Path| PathRef {
            path: path.clone(),
            complement: false,
        };
        match self.0.node(self.1) {
            Node::True => f.write_str("true"),
            Node::Atom(a) => write!(f, "\"{a}\""),
            Node::Not(a) => {
                f.write_str("!")?;
                self.operand(f, *a)
            }
            Node::And(a, b) => {
                self.operand(f, *a)?;
                f.write_str(" & ")?;
                self.operand(f, *b)
            }
            Node::Prob { rel, bound, path } => {
                write!(f, "P{rel}{bound} [ ")?;
                self.path(f, &plain(path))?;
                f.write_str(" ]")
            }
            Node::Exp { rel, bound, term } => {
                write!(f, "E{rel}{bound} [ ")?;
                self.term(f, term)?;
                f.write_str(" ]")
            }
            Node::CmpProb { lhs, rel, rhs } => {
                f.write_str("CP[ ")?;
                self.path(f, lhs)?;
                write!(f, " {rel} ")?;
                self.path(f, rhs)?;
                f.write_str(" ]")
            }
            Node::CmpExp { lhs, rel, rhs } => {
                f.write_str("CE[ ")?;
                self.term(f, lhs)?;
                write!(f, " {rel} ")?;
                self.term(f, rhs)?;
                f.write_str(" ]")
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Shown(self, self.root))
    }
}

impl std::str::FromStr for Formula {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

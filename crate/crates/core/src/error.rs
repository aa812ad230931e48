use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different variable arenas")]
    ArenaMismatch,

    #[error("duplicate variable `{0}` in arena")]
    DuplicateVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A division that must be exact left a remainder. On valid elimination
    /// runs this never happens; seeing it means an internal invariant broke.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("denominator vanishes at the given valuation")]
    EvalPole,

    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("duplicate state `{0}`")]
    DuplicateState(String),

    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("valuation is not admissible: {}", .0.join("; "))]
    Inadmissible(Vec<String>),

    #[error("matrix is singular")]
    Singular,

    #[error("block structure violates stair form at ({0}, {1})")]
    StairForm(usize, usize),

    #[error("dimension {n} exceeds the oracle bound {max}")]
    OracleTooLarge { n: usize, max: usize },

    #[error("target is not reached almost surely; bottom component avoiding it: {{{}}}", .0.join(", "))]
    NotAlmostSure(Vec<String>),

    #[error("formula nests probability, expectation or comparison operators")]
    NestedFormula,

    #[error("formula leaves the monotone fragment at `{0}`")]
    OutsideFragment(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// True for errors that signal a broken internal invariant rather than bad
    /// input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InexactDivision(_) | Error::Invariant(_))
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Comparison relation `<`, `<=`, `>`, `>=`, `=`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rel {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
}

impl Rel {
    pub const ALL: [Rel; 5] = [Rel::Lt, Rel::Le, Rel::Gt, Rel::Ge, Rel::Eq];

    /// Whether `lhs rel rhs` holds given `lhs.cmp(rhs)`.
    pub fn holds(self, ord: Ordering) -> bool {
        match self {
            Rel::Lt => ord.is_lt(),
            Rel::Le => ord.is_le(),
            Rel::Gt => ord.is_gt(),
            Rel::Ge => ord.is_ge(),
            Rel::Eq => ord.is_eq(),
        }
    }

    /// Whether `v rel 0` holds for a value of sign `s`.
    pub fn holds_sign(self, s: i32) -> bool {
        self.holds(s.cmp(&0))
    }

    /// The relation with both sides swapped: `a rel b` iff `b rel.mirror() a`.
    pub fn mirror(self) -> Rel {
        match self {
            Rel::Lt => Rel::Gt,
            Rel::Le => Rel::Ge,
            Rel::Gt => Rel::Lt,
            Rel::Ge => Rel::Le,
            Rel::Eq => Rel::Eq,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Gt => ">",
            Rel::Ge => ">=",
            Rel::Eq => "=",
        }
    }
}

impl FromStr for Rel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Rel::ALL
            .into_iter()
            .find(|r| r.symbol() == s)
            .ok_or_else(|| Error::Usage(format!("unknown relation `{s}`")))
    }
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

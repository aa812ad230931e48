use std::fmt;

use super::{Constraint, Pmc};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Valuation};
use crate::realdec::{solve_constraint, Rel, SemiSet1D};
use crate::Rational;

/// Reason a valuation is not admissible.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    RowSum { state: String, sum: Rational },
    EdgeNotPositive { from: String, to: String, value: Rational },
    Constraint { constraint: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowSum { state, sum } => write!(f, "outgoing probabilities of {state} sum to {sum}"),
            Violation::EdgeNotPositive { from, to, value } => {
                write!(f, "P({from},{to}) = {value} but the edge exists")
            }
            Violation::Constraint { constraint } => write!(f, "constraint {constraint} fails"),
        }
    }
}

impl Pmc {
    /// Every violated admissibility condition at `point` (arena order).
    pub fn violations_at(&self, point: &[Rational]) -> Vec<Violation> {
        let mut out = Vec::new();
        let one = Rational::from_integer(1.into());
        for s in 0..self.num_states() {
            if self.is_trap(s) {
                continue;
            }
            let mut sum = Rational::from_integer(0.into());
            for (&t, p) in self.successors(s) {
                let v = p.eval(point);
                if v <= Rational::from_integer(0.into()) {
                    out.push(Violation::EdgeNotPositive {
                        from: self.state_name(s).to_string(),
                        to: self.state_name(t).to_string(),
                        value: v.clone(),
                    });
                }
                sum += v;
            }
            if sum != one {
                out.push(Violation::RowSum {
                    state: self.state_name(s).to_string(),
                    sum,
                });
            }
        }
        for c in self.constraints() {
            if !c.holds_at(point) {
                out.push(Violation::Constraint {
                    constraint: c.to_string(),
                });
            }
        }
        out
    }

    pub fn check_admissible(&self, v: &Valuation) -> Result<Vec<Violation>> {
        Ok(self.violations_at(&v.point(self.arena())?))
    }

    /// The admissibility conjunction: row sums equal one (omitted where the
    /// sum is syntactically 1), every edge positive, and the user constraints.
    pub fn admissible_chi(&self) -> Vec<Constraint> {
        let arena = self.arena();
        let one = Polynomial::one(arena);
        let zero = Polynomial::zero(arena);
        let mut chi = Vec::new();
        for s in 0..self.num_states() {
            if self.is_trap(s) {
                continue;
            }
            let sum = self
                .successors(s)
                .values()
                .fold(Polynomial::zero(arena), |acc, p| &acc + p);
            if sum != one {
                chi.push(Constraint::new(sum, Rel::Eq, one.clone()));
            }
        }
        for (_, _, p) in self.edges() {
            chi.push(Constraint::new(p.clone(), Rel::Gt, zero.clone()));
        }
        chi.extend(self.constraints().iter().cloned());
        chi
    }

    /// The admissible set `X` of a model with at most one parameter.
    pub fn admissible_set(&self) -> Result<SemiSet1D> {
        if self.num_params() > 1 {
            return Err(Error::Unsupported(format!(
                "symbolic admissible set needs at most one parameter, model has {}",
                self.num_params()
            )));
        }
        let mut x = SemiSet1D::full();
        for c in self.admissible_chi() {
            x = solve_constraint(&c.normalized(), c.rel, &x)?;
            if x.is_empty() {
                break;
            }
        }
        Ok(x)
    }
}

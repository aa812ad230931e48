use std::collections::{BTreeMap, BTreeSet};

use super::{Constraint, Pmc};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Valuation, VarArena};
use crate::realdec::Rel;
use crate::{Poly, RatFun, Rational};

/// Markov chain with exact rational probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcreteMc {
    pub states: Vec<String>,
    pub init: usize,
    pub succ: Vec<BTreeMap<usize, Rational>>,
    pub labels: Vec<BTreeSet<String>>,
    pub weights: Vec<Rational>,
}

impl ConcreteMc {
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn states_with(&self, label: &str) -> Vec<bool> {
        self.labels.iter().map(|l| l.contains(label)).collect()
    }

    pub fn prob(&self, s: usize, t: usize) -> Rational {
        self.succ[s]
            .get(&t)
            .cloned()
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }
}

/// Interval `lo ⊴ x ⊴ hi` for one edge of an interval Markov chain.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi,
            hi_closed: true,
        }
    }

    /// Reads `[a, b]`, `(a, b]`, `[a, b)` or `(a, b)`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidInterval(text.to_string());
        let t = text.trim();
        let lo_closed = match t.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let hi_closed = match t.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let (a, b) = t[1..t.len() - 1].split_once(',').ok_or_else(bad)?;
        let lo = crate::poly::parse_rational(a.trim()).ok_or_else(bad)?;
        let hi = crate::poly::parse_rational(b.trim()).ok_or_else(bad)?;
        Ok(Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        })
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

fn fresh_name(arena: &VarArena, taken: &[String], base: String) -> String {
    let mut name = base.clone();
    let mut k = 1;
    while arena.index_of(&name).is_some() || taken.contains(&name) {
        name = format!("{base}_{k}");
        k += 1;
    }
    name
}

impl Pmc {
    /// Copy with every outgoing edge of the states in `cut` removed.
    pub fn make_traps(&self, cut: &[bool]) -> Pmc {
        let mut out = self.clone();
        for (s, &c) in cut.iter().enumerate() {
            if c {
                out.remove_outgoing(s);
            }
        }
        out
    }

    /// Exact Markov chain at an admissible valuation.
    pub fn instantiate(&self, v: &Valuation) -> Result<ConcreteMc> {
        self.instantiate_at(&v.point(self.arena())?)
    }

    /// As [`instantiate`](Self::instantiate) with values in arena order.
    pub fn instantiate_at(&self, point: &[Rational]) -> Result<ConcreteMc> {
        let violations = self.violations_at(point);
        if !violations.is_empty() {
            return Err(Error::Inadmissible(violations.iter().map(|v| v.to_string()).collect()));
        }
        Ok(ConcreteMc {
            states: self.states().to_vec(),
            init: self.init(),
            succ: (0..self.num_states())
                .map(|s| self.successors(s).iter().map(|(&t, p)| (t, p.eval(point))).collect())
                .collect(),
            labels: (0..self.num_states()).map(|s| self.labels(s).clone()).collect(),
            weights: (0..self.num_states()).map(|s| self.weight(s).eval(point)).collect(),
        })
    }

    /// Turns rational-function transitions into polynomial ones. Each edge
    /// `(s, t)` with a non-constant denominator `g` gets a fresh variable `u`,
    /// transition `f·u` and the constraint `g·u = 1`. Edges not listed keep
    /// their polynomial; listed edges need not exist yet.
    pub fn polynomialize(&self, transitions: &[(usize, usize, RatFun)]) -> Result<Pmc> {
        let mut fresh: Vec<String> = Vec::new();
        let mut plan: Vec<(usize, usize, Poly, Option<(usize, Poly)>)> = Vec::new();
        for (s, t, r) in transitions {
            if !VarArena::same(r.arena(), self.arena()) {
                return Err(Error::ArenaMismatch);
            }
            let r = r.simplify();
            match r.den().constant_value() {
                Some(c) => {
                    let inv = Rational::from_integer(1.into()) / c;
                    plan.push((*s, *t, r.num().scale(&inv), None));
                }
                None => {
                    let base = format!("u_{}_{}", self.state_name(*s), self.state_name(*t));
                    let name = fresh_name(self.arena(), &fresh, base);
                    fresh.push(name);
                    plan.push((*s, *t, r.num().clone(), Some((fresh.len() - 1, r.den().clone()))));
                }
            }
        }
        let arena = self.arena().extended(fresh.iter().cloned())?;
        let base = self.arena().len();
        let mut out = self.embed(&arena)?;
        for (s, t, num, den) in plan {
            let num = num.embed(&arena)?;
            let p = match den {
                None => num,
                Some((k, g)) => {
                    let u = Polynomial::var(&arena, base + k);
                    out.add_constraint(Constraint::new(&g.embed(&arena)? * &u, Rel::Eq, Polynomial::one(&arena)))?;
                    &num * &u
                }
            };
            if out.successors(s).contains_key(&t) {
                out.replace_edge(s, t, p);
            } else {
                out.add_edge(s, t, p)?;
            }
        }
        Ok(out)
    }
}

/// Interval Markov chain as an augmented pMC: one parameter `x_s_t` per
/// edge, constrained to the edge's interval.
pub fn imc_to_pmc(states: &[&str], init: &str, edges: &[(&str, &str, Interval)]) -> Result<Pmc> {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    for (s, t, iv) in edges {
        let empty = iv.lo > iv.hi || (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed));
        if empty || iv.lo < zero || iv.hi > one {
            return Err(Error::InvalidInterval(format!("{iv} on {s} -> {t}")));
        }
    }
    let mut names: Vec<String> = Vec::new();
    for (s, t, _) in edges {
        let name = fresh_name(&VarArena::empty(), &names, format!("x_{s}_{t}"));
        names.push(name);
    }
    let arena = VarArena::new(names)?;
    let mut m = Pmc::new(&arena, states.iter().copied())?;
    m.set_init(m.state_index(init)?);
    for (k, (s, t, iv)) in edges.iter().enumerate() {
        let x = Polynomial::var(&arena, k);
        let (si, ti) = (m.state_index(s)?, m.state_index(t)?);
        m.add_edge(si, ti, x.clone())?;
        let c = |q: &Rational| Polynomial::constant(&arena, q.clone());
        if iv.lo == iv.hi {
            m.add_constraint(Constraint::new(x, Rel::Eq, c(&iv.lo)))?;
            continue;
        }
        let lo_rel = if iv.lo_closed { Rel::Ge } else { Rel::Gt };
        let hi_rel = if iv.hi_closed { Rel::Le } else { Rel::Lt };
        m.add_constraint(Constraint::new(x.clone(), lo_rel, c(&iv.lo)))?;
        m.add_constraint(Constraint::new(x, hi_rel, c(&iv.hi)))?;
    }
    Ok(m)
}

//! Satisfaction sets of a single-parameter model as a function of the
//! parameter. The admissible set is cut into points and open intervals on
//! which every constraint polynomial met so far has constant sign; each cell
//! then carries one satisfaction vector per formula node.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use super::dag::{Formula, Node, NodeId, Path, PathRef, Term};
use crate::error::{Error, Result};
use crate::linsolve::SolverKind;
use crate::model::Pmc;
use crate::poly::Polynomial;
use crate::props;
use crate::realdec::{isolate_roots, rational_inside, AlgebraicNumber, Bound, Component, Rel, SemiSet1D, UniPoly};
use crate::{Poly, RatFun, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellKind {
    Point(AlgebraicNumber),
    Open(Bound, Bound),
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub kind: CellKind,
    /// A rational member; `None` only for an irrational point.
    pub sample: Option<Rational>,
    /// Satisfaction vector of every processed node, constant on the cell.
    pub sat: Vec<Vec<bool>>,
}

impl Cell {
    fn new(kind: CellKind, sat: Vec<Vec<bool>>) -> Self {
        let sample = match &kind {
            CellKind::Point(a) => a.as_rational().cloned(),
            CellKind::Open(lo, hi) => Some(rational_inside(lo, hi)),
        };
        Cell { kind, sample, sat }
    }

    pub fn set(&self) -> SemiSet1D {
        match &self.kind {
            CellKind::Point(a) => SemiSet1D::point(a.clone()),
            CellKind::Open(lo, hi) => SemiSet1D::open(lo.clone(), hi.clone()),
        }
    }

    /// The sample, or the point itself when it is irrational.
    pub fn point(&self) -> AlgebraicNumber {
        match (&self.sample, &self.kind) {
            (Some(q), _) => AlgebraicNumber::rational(q.clone()),
            (None, CellKind::Point(a)) => a.clone(),
            (None, CellKind::Open(..)) => unreachable!("open cells have rational samples"),
        }
    }

    pub fn is_open(&self) -> bool {
        matches!(self.kind, CellKind::Open(..))
    }
}

/// Ordered cells partitioning the admissible set.
#[derive(Clone, Debug)]
pub struct CellDecomposition {
    pub domain: SemiSet1D,
    pub cells: Vec<Cell>,
}

/// Region of the admissible set on which a node holds in exactly `states`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatPair {
    pub gamma: SemiSet1D,
    pub states: BTreeSet<usize>,
}

#[derive(Clone, Debug)]
pub struct SatTable {
    formula: Formula,
    decomposition: CellDecomposition,
}

impl SatTable {
    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn decomposition(&self) -> &CellDecomposition {
        &self.decomposition
    }

    /// Pairs of `node`, one per distinct state set, ordered by leftmost region.
    pub fn pairs(&self, node: NodeId) -> Vec<SatPair> {
        let mut out: Vec<SatPair> = Vec::new();
        for c in &self.decomposition.cells {
            let states = super::concrete::to_set(&c.sat[node]);
            match out.iter_mut().find(|p| p.states == states) {
                Some(p) => p.gamma = p.gamma.union(&c.set()),
                None => out.push(SatPair { gamma: c.set(), states }),
            }
        }
        out
    }

    pub fn root_pairs(&self) -> Vec<SatPair> {
        self.pairs(self.formula.root())
    }
}

/// A quantity per state: a quotient of polynomials or +∞.
#[derive(Clone, Debug)]
pub(crate) enum Quant {
    Inf,
    Frac(Poly, Poly),
}

impl Quant {
    fn from_ratfun(r: &RatFun) -> Self {
        Quant::Frac(r.num().clone(), r.den().clone())
    }

    fn constant(m: &Pmc, c: &Rational) -> Self {
        Quant::Frac(Polynomial::constant(m.arena(), c.clone()), Polynomial::one(m.arena()))
    }

    fn complement(&self) -> Self {
        match self {
            Quant::Frac(n, d) => Quant::Frac(d - n, d.clone()),
            Quant::Inf => Quant::Inf,
        }
    }
}

/// Truth of `lhs rel rhs` on a cell: fixed, or the sign test
/// `sign(h)·sign(g) rel 0` after cross-multiplication.
#[derive(Clone, Debug)]
pub(crate) enum Outcome {
    Const(bool),
    Sign { h: Poly, g: Poly, rel: Rel },
}

pub(crate) fn compare(lhs: &Quant, rel: Rel, rhs: &Quant) -> Outcome {
    use std::cmp::Ordering::*;
    match (lhs, rhs) {
        (Quant::Inf, Quant::Inf) => Outcome::Const(rel.holds(Equal)),
        (Quant::Inf, _) => Outcome::Const(rel.holds(Greater)),
        (_, Quant::Inf) => Outcome::Const(rel.holds(Less)),
        (Quant::Frac(n1, d1), Quant::Frac(n2, d2)) => {
            let h = &(n1 * d2) - &(n2 * d1);
            let g = d1 * d2;
            match (h.constant_value(), g.constant_value()) {
                (Some(h), Some(g)) => Outcome::Const(rel.holds_sign(sign(&h) * sign(&g))),
                _ => Outcome::Sign { h, g, rel },
            }
        }
    }
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum QKey {
    Next(Vec<bool>),
    Until(Vec<bool>, Vec<bool>),
    Acc(Vec<bool>),
    MeanPayoff(Vec<bool>),
}

/// Parametric quantities of a model, cached by operand state sets.
pub(crate) struct Quantities<'a> {
    m: &'a Pmc,
    solver: SolverKind,
    cache: HashMap<QKey, Vec<Quant>>,
}

impl<'a> Quantities<'a> {
    pub fn new(m: &'a Pmc, solver: SolverKind) -> Self {
        Quantities {
            m,
            solver,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, key: QKey) -> Result<Vec<Quant>> {
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let m = self.m;
        let v: Vec<Quant> = match &key {
            QKey::Next(t) => (0..m.num_states())
                .map(|s| {
                    let p = if m.is_trap(s) {
                        if t[s] {
                            Polynomial::one(m.arena())
                        } else {
                            Polynomial::zero(m.arena())
                        }
                    } else {
                        m.successors(s)
                            .iter()
                            .filter(|(&u, _)| t[u])
                            .fold(Polynomial::zero(m.arena()), |acc, (_, p)| &acc + p)
                    };
                    Quant::Frac(p, Polynomial::one(m.arena()))
                })
                .collect(),
            QKey::Until(a, b) => props::until(m, a, b, self.solver)?
                .values
                .iter()
                .map(Quant::from_ratfun)
                .collect(),
            QKey::Acc(t) => props::expected_weight_all(m, t, self.solver)?
                .values
                .iter()
                .map(|v| v.as_ref().map_or(Quant::Inf, Quant::from_ratfun))
                .collect(),
            QKey::MeanPayoff(t) => props::mean_payoff(m, t, self.solver)?
                .values
                .iter()
                .map(Quant::from_ratfun)
                .collect(),
        };
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    fn path(&mut self, p: &PathRef, sat: &[Vec<bool>]) -> Result<Vec<Quant>> {
        let v = match &p.path {
            Path::Next(a) => self.get(QKey::Next(sat[*a].clone()))?,
            Path::Until(a, b) => self.get(QKey::Until(sat[*a].clone(), sat[*b].clone()))?,
        };
        Ok(if p.complement {
            v.iter().map(Quant::complement).collect()
        } else {
            v
        })
    }

    fn term(&mut self, t: &Term, sat: &[Vec<bool>]) -> Result<Vec<Quant>> {
        match t {
            Term::Acc(a) => self.get(QKey::Acc(sat[*a].clone())),
            Term::MeanPayoff(a) => self.get(QKey::MeanPayoff(sat[*a].clone())),
        }
    }

    /// Per-state outcome of a quantitative node, given the operand sets.
    pub fn outcomes(&mut self, node: &Node, sat: &[Vec<bool>]) -> Result<Vec<Outcome>> {
        let m = self.m;
        let plain = |path: &Path| PathRef {
            path: path.clone(),
            complement: false,
        };
        let (lhs, rel, rhs) = match node {
            Node::Prob { rel, bound, path } => {
                let c = Quant::constant(m, bound);
                (self.path(&plain(path), sat)?, *rel, vec![c; m.num_states()])
            }
            Node::Exp { rel, bound, term } => {
                let c = Quant::constant(m, bound);
                (self.term(term, sat)?, *rel, vec![c; m.num_states()])
            }
            Node::CmpProb { lhs, rel, rhs } => (self.path(lhs, sat)?, *rel, self.path(rhs, sat)?),
            Node::CmpExp { lhs, rel, rhs } => (self.term(lhs, sat)?, *rel, self.term(rhs, sat)?),
            _ => return Err(Error::Invariant("outcomes of a boolean node".to_string())),
        };
        Ok(lhs.iter().zip(&rhs).map(|(a, b)| compare(a, rel, b)).collect())
    }
}

/// Sign of `p` at a rational point or at an algebraic point.
fn sign_at(m: &Pmc, p: &Poly, cell: &Cell) -> Result<i32> {
    if let Some(c) = p.constant_value() {
        return Ok(sign(&c));
    }
    match &cell.sample {
        Some(q) => {
            let point = vec![q.clone(); m.num_params()];
            Ok(sign(&p.eval(&point)))
        }
        None => Ok(cell.point().sign_of(&UniPoly::from_poly(p)?.0)),
    }
}

fn holds(m: &Pmc, o: &Outcome, cell: &Cell) -> Result<bool> {
    match o {
        Outcome::Const(b) => Ok(*b),
        Outcome::Sign { h, g, rel } => {
            let sg = sign_at(m, g, cell)?;
            if sg == 0 {
                return Err(Error::Invariant(format!("denominator {g} vanishes on an admissible cell")));
            }
            Ok(rel.holds_sign(sign_at(m, h, cell)? * sg))
        }
    }
}

/// Splits an open cell at the roots of the outcome polynomials inside it.
fn split(kind: &CellKind, outcomes: &[Outcome]) -> Result<Vec<CellKind>> {
    let CellKind::Open(lo, hi) = kind else {
        return Ok(vec![kind.clone()]);
    };
    let mut polys: Vec<&Poly> = Vec::new();
    for o in outcomes {
        if let Outcome::Sign { h, g, .. } = o {
            for p in [h, g] {
                if p.constant_value().is_none() && !polys.contains(&p) {
                    polys.push(p);
                }
            }
        }
    }
    let mut roots: Vec<AlgebraicNumber> = Vec::new();
    for p in polys {
        let (u, _) = UniPoly::from_poly(p)?;
        for r in isolate_roots(&u) {
            let b = Bound::Fin(r.clone());
            if &b > lo && &b < hi && !roots.contains(&r) {
                roots.push(r);
            }
        }
    }
    roots.sort();
    let mut out = Vec::with_capacity(2 * roots.len() + 1);
    let mut left = lo.clone();
    for r in roots {
        out.push(CellKind::Open(left, Bound::Fin(r.clone())));
        out.push(CellKind::Point(r.clone()));
        left = Bound::Fin(r);
    }
    out.push(CellKind::Open(left, hi.clone()));
    Ok(out)
}

fn boolean_sat(node: &Node, sat: &[Vec<bool>], m: &Pmc) -> Vec<bool> {
    match node {
        Node::True => vec![true; m.num_states()],
        Node::Atom(a) => m.states_with(a),
        Node::Not(a) => sat[*a].iter().map(|&b| !b).collect(),
        Node::And(a, b) => sat[*a].iter().zip(&sat[*b]).map(|(&x, &y)| x && y).collect(),
        _ => unreachable!("quantitative node"),
    }
}

pub(crate) fn require_univariate(m: &Pmc) -> Result<()> {
    if m.num_params() > 1 {
        return Err(Error::Unsupported(format!(
            "symbolic model checking needs at most one parameter, model has {}",
            m.num_params()
        )));
    }
    Ok(())
}

/// Satisfaction sets of every node of `f` over the admissible set.
pub fn sat_all_univar(m: &Pmc, f: &Formula) -> Result<SatTable> {
    sat_all_univar_with(m, f, SolverKind::BareissScc)
}

pub fn sat_all_univar_with(m: &Pmc, f: &Formula, solver: SolverKind) -> Result<SatTable> {
    require_univariate(m)?;
    let domain = m.admissible_set()?;
    let mut cells: Vec<Cell> = domain
        .components()
        .iter()
        .map(|c| match c {
            Component::Point(a) => Cell::new(CellKind::Point(a.clone()), Vec::new()),
            Component::Open(lo, hi) => Cell::new(CellKind::Open(lo.clone(), hi.clone()), Vec::new()),
        })
        .collect();
    let mut q = Quantities::new(m, solver);
    for node in f.nodes() {
        if !node.is_quantitative() {
            for c in &mut cells {
                let v = boolean_sat(node, &c.sat, m);
                c.sat.push(v);
            }
            continue;
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in cells {
            let outcomes = q.outcomes(node, &c.sat)?;
            for kind in split(&c.kind, &outcomes)? {
                let mut sub = Cell::new(kind, c.sat.clone());
                let v = outcomes
                    .iter()
                    .map(|o| holds(m, o, &sub))
                    .collect::<Result<Vec<bool>>>()?;
                sub.sat.push(v);
                next.push(sub);
            }
        }
        cells = next;
    }
    Ok(SatTable {
        formula: f.clone(),
        decomposition: CellDecomposition { domain, cells },
    })
}

/// `{ξ ∈ domain : o holds}` for a single outcome.
pub(crate) fn outcome_region(o: &Outcome, domain: &SemiSet1D) -> Result<SemiSet1D> {
    match o {
        Outcome::Const(true) => Ok(domain.clone()),
        Outcome::Const(false) => Ok(SemiSet1D::empty()),
        Outcome::Sign { h, g, rel } => crate::realdec::solve_constraint(&(h * g), *rel, domain),
    }
}

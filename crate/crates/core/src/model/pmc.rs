use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarArena};
use crate::realdec::Rel;
use crate::{Poly, Rational};

/// Polynomial side constraint `lhs rel rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub lhs: Poly,
    pub rel: Rel,
    pub rhs: Poly,
}

impl Constraint {
    pub fn new(lhs: Poly, rel: Rel, rhs: Poly) -> Self {
        Constraint { lhs, rel, rhs }
    }

    /// `lhs - rhs`, to be compared against zero with `rel`.
    pub fn normalized(&self) -> Poly {
        &self.lhs - &self.rhs
    }

    pub fn holds_at(&self, point: &[Rational]) -> bool {
        self.rel.holds(self.lhs.eval(point).cmp(&self.rhs.eval(point)))
    }
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel, self.rhs)
    }
}

/// Parametric Markov chain with polynomial transitions, side constraints,
/// labels and state weights. States without outgoing edges are traps.
#[derive(Clone, Debug, PartialEq)]
pub struct Pmc {
    arena: Arc<VarArena>,
    states: Vec<String>,
    index: HashMap<String, usize>,
    init: usize,
    edges: Vec<BTreeMap<usize, Poly>>,
    constraints: Vec<Constraint>,
    labels: Vec<BTreeSet<String>>,
    explicit_labels: bool,
    weights: Vec<Poly>,
}

impl Pmc {
    /// Model with the given states, no edges, the first state initial and
    /// every state labelled by its own name.
    pub fn new<I, S>(arena: &Arc<VarArena>, states: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        if states.is_empty() {
            return Err(Error::InvalidModel("no states".to_string()));
        }
        let mut index = HashMap::new();
        for (i, s) in states.iter().enumerate() {
            if index.insert(s.clone(), i).is_some() {
                return Err(Error::DuplicateState(s.clone()));
            }
        }
        let n = states.len();
        Ok(Pmc {
            arena: arena.clone(),
            labels: states.iter().map(|s| BTreeSet::from([s.clone()])).collect(),
            states,
            index,
            init: 0,
            edges: vec![BTreeMap::new(); n],
            constraints: Vec::new(),
            explicit_labels: false,
            weights: vec![Polynomial::zero(arena); n],
        })
    }

    pub fn arena(&self) -> &Arc<VarArena> {
        &self.arena
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_params(&self) -> usize {
        self.arena.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.iter().map(BTreeMap::len).sum()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, s: usize) -> &str {
        &self.states[s]
    }

    pub fn state_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownState(name.to_string()))
    }

    pub fn init(&self) -> usize {
        self.init
    }

    pub fn set_init(&mut self, s: usize) {
        self.init = s;
    }

    /// Outgoing edges of `s` with their transition polynomials.
    pub fn successors(&self, s: usize) -> &BTreeMap<usize, Poly> {
        &self.edges[s]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(s, row)| row.iter().map(move |(&t, p)| (s, t, p)))
    }

    /// Transition polynomial, zero when there is no edge.
    pub fn transition(&self, s: usize, t: usize) -> Poly {
        self.edges[s]
            .get(&t)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.arena))
    }

    pub fn is_trap(&self, s: usize) -> bool {
        self.edges[s].is_empty()
    }

    pub fn add_edge(&mut self, s: usize, t: usize, p: Poly) -> Result<()> {
        if !VarArena::same(p.arena(), &self.arena) {
            return Err(Error::ArenaMismatch);
        }
        if p.is_zero() {
            return Err(Error::InvalidModel(format!(
                "edge {} -> {} has the zero polynomial",
                self.states[s], self.states[t]
            )));
        }
        if self.edges[s].contains_key(&t) {
            return Err(Error::DuplicateEdge(self.states[s].clone(), self.states[t].clone()));
        }
        self.edges[s].insert(t, p);
        Ok(())
    }

    pub fn remove_outgoing(&mut self, s: usize) {
        self.edges[s].clear();
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn add_constraint(&mut self, c: Constraint) -> Result<()> {
        if !VarArena::same(c.lhs.arena(), &self.arena) || !VarArena::same(c.rhs.arena(), &self.arena) {
            return Err(Error::ArenaMismatch);
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn labels(&self, s: usize) -> &BTreeSet<String> {
        &self.labels[s]
    }

    /// True when labels were given explicitly rather than defaulting to
    /// state names.
    pub fn has_explicit_labels(&self) -> bool {
        self.explicit_labels
    }

    /// Removes every label, including the state-name defaults.
    pub fn clear_labels(&mut self) {
        self.explicit_labels = true;
        for l in &mut self.labels {
            l.clear();
        }
    }

    /// Adds `label` to `s`. The first call drops the state-name defaults.
    pub fn add_label(&mut self, s: usize, label: impl Into<String>) {
        if !self.explicit_labels {
            self.clear_labels();
        }
        self.labels[s].insert(label.into());
    }

    /// Membership vector of the states carrying `label`.
    pub fn states_with(&self, label: &str) -> Vec<bool> {
        self.labels.iter().map(|l| l.contains(label)).collect()
    }

    pub fn all_labels(&self) -> BTreeSet<String> {
        self.labels.iter().flatten().cloned().collect()
    }

    pub fn weight(&self, s: usize) -> &Poly {
        &self.weights[s]
    }

    pub fn set_weight(&mut self, s: usize, w: Poly) -> Result<()> {
        if !VarArena::same(w.arena(), &self.arena) {
            return Err(Error::ArenaMismatch);
        }
        self.weights[s] = w;
        Ok(())
    }

    /// Same model over a larger arena containing this one's variables.
    pub fn embed(&self, target: &Arc<VarArena>) -> Result<Pmc> {
        let mut out = self.clone();
        out.arena = target.clone();
        for row in &mut out.edges {
            for p in row.values_mut() {
                *p = p.embed(target)?;
            }
        }
        for c in &mut out.constraints {
            c.lhs = c.lhs.embed(target)?;
            c.rhs = c.rhs.embed(target)?;
        }
        for w in &mut out.weights {
            *w = w.embed(target)?;
        }
        Ok(out)
    }

    /// Overwrites an existing edge's polynomial.
    pub(crate) fn replace_edge(&mut self, s: usize, t: usize, p: Poly) {
        self.edges[s].insert(t, p);
    }
}

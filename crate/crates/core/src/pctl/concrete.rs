//! Bottom-up model checking of a Markov chain with exact rational
//! probabilities. Kept independent of the symbolic layers (own graph
//! searches, plain elimination) so the two can be checked against each other.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::dag::{Formula, Node, Path, PathRef, Term};
use crate::linsolve::solve_dense;
use crate::model::ConcreteMc;
use crate::Rational;

/// Expectation value; `None` stands for +∞.
pub type Extended = Option<Rational>;

/// Total order on values extended by +∞, with ∞ equal to itself.
pub fn cmp_extended(a: &Extended, b: &Extended) -> Ordering {
    match (a, b) {
        (Some(x), Some(y)) => x.cmp(y),
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
    }
}

/// Satisfying states of the root.
pub fn check_concrete(mc: &ConcreteMc, f: &Formula) -> BTreeSet<usize> {
    to_set(&check_concrete_all(mc, f)[f.root()])
}

pub(crate) fn to_set(v: &[bool]) -> BTreeSet<usize> {
    v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// Satisfaction vector of every node of `f`.
pub fn check_concrete_all(mc: &ConcreteMc, f: &Formula) -> Vec<Vec<bool>> {
    let n = mc.num_states();
    let mut sat: Vec<Vec<bool>> = Vec::with_capacity(f.len());
    for node in f.nodes() {
        let v = match node {
            Node::True => vec![true; n],
            Node::Atom(a) => mc.states_with(a),
            Node::Not(a) => sat[*a].iter().map(|&b| !b).collect(),
            Node::And(a, b) => sat[*a].iter().zip(&sat[*b]).map(|(&x, &y)| x && y).collect(),
            Node::Prob { rel, bound, path } => path_values(mc, path, &sat)
                .iter()
                .map(|p| rel.holds(p.cmp(bound)))
                .collect(),
            Node::Exp { rel, bound, term } => {
                let bound = Some(bound.clone());
                term_values(mc, term, &sat)
                    .iter()
                    .map(|e| rel.holds(cmp_extended(e, &bound)))
                    .collect()
            }
            Node::CmpProb { lhs, rel, rhs } => {
                let (l, r) = (path_ref_values(mc, lhs, &sat), path_ref_values(mc, rhs, &sat));
                l.iter().zip(&r).map(|(a, b)| rel.holds(a.cmp(b))).collect()
            }
            Node::CmpExp { lhs, rel, rhs } => {
                let (l, r) = (term_values(mc, lhs, &sat), term_values(mc, rhs, &sat));
                l.iter().zip(&r).map(|(a, b)| rel.holds(cmp_extended(a, b))).collect()
            }
        };
        sat.push(v);
    }
    sat
}

fn path_ref_values(mc: &ConcreteMc, p: &PathRef, sat: &[Vec<bool>]) -> Vec<Rational> {
    let v = path_values(mc, &p.path, sat);
    if p.complement {
        v.into_iter().map(|x| Rational::one() - x).collect()
    } else {
        v
    }
}

pub(crate) fn path_values(mc: &ConcreteMc, p: &Path, sat: &[Vec<bool>]) -> Vec<Rational> {
    match p {
        Path::Next(a) => next_prob(mc, &sat[*a]),
        Path::Until(a, b) => until_prob(mc, &sat[*a], &sat[*b]),
    }
}

fn term_values(mc: &ConcreteMc, t: &Term, sat: &[Vec<bool>]) -> Vec<Extended> {
    match t {
        Term::Acc(a) => acc_weight(mc, &sat[*a]),
        Term::MeanPayoff(a) => mean_payoff(mc, &sat[*a]).into_iter().map(Some).collect(),
    }
}

/// `Pr_s(X T)`; a state without successors loops on itself.
pub fn next_prob(mc: &ConcreteMc, t: &[bool]) -> Vec<Rational> {
    (0..mc.num_states())
        .map(|s| {
            if mc.succ[s].is_empty() {
                return if t[s] { Rational::one() } else { Rational::zero() };
            }
            mc.succ[s]
                .iter()
                .filter(|(&u, _)| t[u])
                .fold(Rational::zero(), |acc, (_, p)| acc + p)
        })
        .collect()
}

/// States from which `target` is reachable along `through` states.
fn backward(mc: &ConcreteMc, target: &[bool], through: &[bool]) -> Vec<bool> {
    let n = mc.num_states();
    let mut hit = target.to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..n {
            if !hit[s] && through[s] && mc.succ[s].keys().any(|&t| hit[t]) {
                hit[s] = true;
                changed = true;
            }
        }
    }
    hit
}

/// `Pr_s(T1 U T2)`.
pub fn until_prob(mc: &ConcreteMc, t1: &[bool], t2: &[bool]) -> Vec<Rational> {
    let n = mc.num_states();
    let may = backward(mc, t2, t1);
    let unknowns: Vec<usize> = (0..n).filter(|&s| may[s] && !t2[s]).collect();
    let mut out: Vec<Rational> = (0..n)
        .map(|s| if t2[s] { Rational::one() } else { Rational::zero() })
        .collect();
    let rhs: Vec<Rational> = unknowns
        .iter()
        .map(|&s| {
            mc.succ[s]
                .iter()
                .filter(|(&t, _)| t2[t])
                .fold(Rational::zero(), |acc, (_, p)| acc + p)
        })
        .collect();
    for (s, v) in unknowns.iter().zip(solve_restricted(mc, &unknowns, rhs)) {
        out[*s] = v;
    }
    out
}

/// Solves `x_s - Σ_{t ∈ rows} P(s,t)·x_t = rhs_s` over `rows`.
fn solve_restricted(mc: &ConcreteMc, rows: &[usize], rhs: Vec<Rational>) -> Vec<Rational> {
    let k = rows.len();
    if k == 0 {
        return Vec::new();
    }
    let pos = |t: usize| rows.iter().position(|&r| r == t);
    let mut a = vec![vec![Rational::zero(); k]; k];
    for (i, &s) in rows.iter().enumerate() {
        a[i][i] = Rational::one();
        for (&t, p) in &mc.succ[s] {
            if let Some(j) = pos(t) {
                a[i][j] = &a[i][j] - p;
            }
        }
    }
    solve_dense(&a, &rhs).expect("transient part of a Markov chain is nonsingular")
}

/// Expected weight collected before reaching `t` (target weight excluded);
/// +∞ where `t` is missed with positive probability.
pub fn acc_weight(mc: &ConcreteMc, t: &[bool]) -> Vec<Extended> {
    let n = mc.num_states();
    let reach = until_prob(mc, &vec![true; n], t);
    let rows: Vec<usize> = (0..n).filter(|&s| !t[s] && reach[s].is_one()).collect();
    let rhs = rows.iter().map(|&s| mc.weights[s].clone()).collect();
    let mut out: Vec<Extended> = (0..n).map(|s| t[s].then(Rational::zero)).collect();
    for (s, v) in rows.iter().zip(solve_restricted(mc, &rows, rhs)) {
        out[*s] = Some(v);
    }
    out
}

/// Bottom strongly connected components, each sorted.
pub fn bottom_components(mc: &ConcreteMc) -> Vec<Vec<usize>> {
    let n = mc.num_states();
    let reach: Vec<Vec<bool>> = (0..n)
        .map(|s| {
            let mut seen = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &v in mc.succ[u].keys() {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            seen
        })
        .collect();
    let mut taken = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if taken[s] || !(0..n).all(|t| !reach[s][t] || reach[t][s]) {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&t| reach[s][t]).collect();
        for &t in &comp {
            taken[t] = true;
        }
        out.push(comp);
    }
    out
}

/// Stationary distribution of a bottom component.
pub fn stationary(mc: &ConcreteMc, comp: &[usize]) -> Vec<Rational> {
    let k = comp.len();
    if k == 1 {
        return vec![Rational::one()];
    }
    let pos = |t: usize| comp.iter().position(|&c| c == t).expect("closed component");
    let mut a = vec![vec![Rational::zero(); k]; k];
    for (j, &s) in comp.iter().enumerate() {
        a[j][j] -= Rational::one();
        for (&t, p) in &mc.succ[s] {
            a[pos(t)][j] += p;
        }
    }
    a[k - 1] = vec![Rational::one(); k];
    let mut b = vec![Rational::zero(); k];
    b[k - 1] = Rational::one();
    solve_dense(&a, &b).expect("irreducible chain has a unique stationary distribution")
}

/// Long-run average weight collected in `t` states.
pub fn mean_payoff(mc: &ConcreteMc, t: &[bool]) -> Vec<Rational> {
    let n = mc.num_states();
    let mut out = vec![Rational::zero(); n];
    for comp in bottom_components(mc) {
        let zeta = stationary(mc, &comp);
        let mp = comp
            .iter()
            .zip(&zeta)
            .filter(|(&s, _)| t[s])
            .fold(Rational::zero(), |acc, (&s, z)| acc + z * &mc.weights[s]);
        if mp.is_zero() {
            continue;
        }
        let mut in_comp = vec![false; n];
        for &s in &comp {
            in_comp[s] = true;
        }
        let pr = until_prob(mc, &vec![true; n], &in_comp);
        for s in 0..n {
            out[s] += &pr[s] * &mp;
        }
    }
    out
}

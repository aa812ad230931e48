use crate::error::Result;
use crate::linsolve::{solve, SolverKind};
use crate::model::Pmc;
use crate::poly::{Polynomial, RationalFunction};
use crate::{LinSystem, RatFun, Solution};

/// Linear system for `Pr(T1 U T2)` together with its qualitative context.
#[derive(Clone, Debug)]
pub struct UntilSystem {
    pub system: LinSystem,
    /// State of every row, rows grouped by SCC in topological order.
    pub unknowns: Vec<usize>,
    /// States that can reach `T2` through `T1`.
    pub may_reach: Vec<bool>,
    /// Value identically 0.
    pub zero: Vec<bool>,
    /// Value identically 1 (includes `T2`).
    pub one: Vec<bool>,
}

/// `Pr_s(T1 U T2)` for every state.
#[derive(Clone, Debug)]
pub struct ReachResult {
    pub values: Vec<RatFun>,
    pub zero_states: Vec<bool>,
    pub one_states: Vec<bool>,
    pub solved_states: Vec<bool>,
    /// Solver output for the solved states, `None` when nothing was left to solve.
    pub solution: Option<Solution>,
}

impl ReachResult {
    pub fn rows(&self) -> usize {
        self.solution.as_ref().map_or(0, |s| s.entries.len())
    }
}

/// Builds the system after the graph analysis: `U` by backward search
/// through `T1`, the identically-one states as those that cannot reach
/// `S ∖ U` along `T1 ∖ T2`, and one row per remaining state of `U ∖ T2`.
pub fn until_system(m: &Pmc, t1: &[bool], t2: &[bool]) -> Result<UntilSystem> {
    let n = m.num_states();
    let may_reach = m.reach_backward(t2, t1);
    let zero: Vec<bool> = may_reach.iter().map(|&u| !u).collect();
    let t1_only: Vec<bool> = (0..n).map(|s| t1[s] && !t2[s]).collect();
    let may_fail = m.reach_backward(&zero, &t1_only);
    let one: Vec<bool> = may_fail.iter().map(|&f| !f).collect();

    let gi = m.graph_info();
    let mut unknowns = Vec::new();
    let mut blocks = Vec::new();
    for scc in &gi.sccs {
        let start = unknowns.len();
        unknowns.extend(scc.iter().copied().filter(|&s| may_reach[s] && !t2[s] && !one[s]));
        if unknowns.len() > start {
            blocks.push(start..unknowns.len());
        }
    }
    let mut row_of = vec![None; n];
    for (i, &s) in unknowns.iter().enumerate() {
        row_of[s] = Some(i);
    }
    let arena = m.arena();
    let k = unknowns.len();
    let mut a = vec![vec![Polynomial::zero(arena); k]; k];
    let mut b = vec![Polynomial::zero(arena); k];
    for (i, &s) in unknowns.iter().enumerate() {
        a[i][i] = Polynomial::one(arena);
        for (&t, p) in m.successors(s) {
            if let Some(j) = row_of[t] {
                a[i][j] = &a[i][j] - p;
            } else if one[t] {
                b[i] = &b[i] + p;
            }
        }
    }
    let system = LinSystem::new(arena, a, b)?.with_blocks(blocks)?;
    Ok(UntilSystem {
        system,
        unknowns,
        may_reach,
        zero,
        one,
    })
}

pub fn until(m: &Pmc, t1: &[bool], t2: &[bool], solver: SolverKind) -> Result<ReachResult> {
    let us = until_system(m, t1, t2)?;
    let arena = m.arena();
    let n = m.num_states();
    let mut values: Vec<RatFun> = (0..n)
        .map(|s| {
            if us.one[s] {
                RationalFunction::one(arena)
            } else {
                RationalFunction::zero(arena)
            }
        })
        .collect();
    let mut solved = vec![false; n];
    let solution = if us.unknowns.is_empty() {
        None
    } else {
        let sol = solve(&us.system, solver)?;
        for (i, &s) in us.unknowns.iter().enumerate() {
            values[s] = sol.entries[i].clone();
            solved[s] = true;
        }
        Some(sol)
    };
    Ok(ReachResult {
        values,
        zero_states: us.zero,
        one_states: us.one,
        solved_states: solved,
        solution,
    })
}

/// `Pr_s(◇T)`.
pub fn reach(m: &Pmc, target: &[bool], solver: SolverKind) -> Result<ReachResult> {
    until(m, &vec![true; m.num_states()], target, solver)
}

use crate::error::{Error, Result};
use crate::linsolve::{solve, solve_param_rhs, SolverKind};
use crate::model::Pmc;
use crate::poly::{Polynomial, RationalFunction};
use crate::{LinSystem, RatFun, Rational};

/// Per-state expectation; `None` where it is not defined (the target is
/// missed with positive probability).
#[derive(Clone, Debug)]
pub struct ExpectationResult {
    pub values: Vec<Option<RatFun>>,
    /// Rows of the linear system that was solved.
    pub rows: usize,
    /// The matrix was parameter-free and only the right-hand side
    /// carried parameters, so plain rational elimination sufficed.
    pub param_free_matrix: bool,
}

/// Expected weight accumulated before the first visit to `target`, for
/// every state that reaches `target` almost surely. The weight of the
/// target state itself is not counted.
pub fn expected_weight_all(m: &Pmc, target: &[bool], solver: SolverKind) -> Result<ExpectationResult> {
    let n = m.num_states();
    let sure = super::sure_states(m, target);
    let gi = m.graph_info();
    let mut unknowns = Vec::new();
    let mut blocks = Vec::new();
    for scc in &gi.sccs {
        let start = unknowns.len();
        unknowns.extend(scc.iter().copied().filter(|&s| sure[s] && !target[s]));
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
    let mut b = Vec::with_capacity(k);
    for (i, &s) in unknowns.iter().enumerate() {
        a[i][i] = Polynomial::one(arena);
        for (&t, p) in m.successors(s) {
            if let Some(j) = row_of[t] {
                a[i][j] = &a[i][j] - p;
            }
        }
        b.push(m.weight(s).clone());
    }
    let sys = LinSystem::new(arena, a, b)?.with_blocks(blocks)?;
    let mut values: Vec<Option<RatFun>> = (0..n)
        .map(|s| target[s].then(|| RationalFunction::zero(arena)))
        .collect();
    let param_free = sys.matrix_is_constant();
    if k > 0 {
        let entries: Vec<RatFun> = if param_free {
            let consts: Vec<Vec<Rational>> = sys
                .a()
                .iter()
                .map(|row| row.iter().map(|p| p.constant_value().expect("constant")).collect())
                .collect();
            solve_param_rhs(&consts, sys.b())?
                .into_iter()
                .map(RationalFunction::from_poly)
                .collect()
        } else {
            solve(&sys, solver)?.entries
        };
        for (i, &s) in unknowns.iter().enumerate() {
            values[s] = Some(entries[i].clone());
        }
    }
    Ok(ExpectationResult {
        values,
        rows: k,
        param_free_matrix: param_free,
    })
}

/// As [`expected_weight_all`], failing when the initial state misses the
/// target with positive probability. The error names a bottom component
/// reachable from the initial state that avoids the target.
pub fn expected_weight(m: &Pmc, target: &[bool], solver: SolverKind) -> Result<ExpectationResult> {
    let sure = super::sure_states(m, target);
    if !sure[m.init()] {
        return Err(Error::NotAlmostSure(avoiding_bscc(m, target)));
    }
    expected_weight_all(m, target, solver)
}

fn avoiding_bscc(m: &Pmc, target: &[bool]) -> Vec<String> {
    let cut = m.make_traps(target);
    let mut start = vec![false; m.num_states()];
    start[m.init()] = true;
    let reachable = cut.reach_forward(&start);
    let gi = cut.graph_info();
    let witness = gi
        .bsccs()
        .find(|b| reachable[b[0]] && b.iter().all(|&s| !target[s]))
        .map(|b| b.iter().map(|&s| m.state_name(s).to_string()).collect())
        .unwrap_or_default();
    witness
}

use crate::error::{Error, Result};
use crate::linsolve::{solve, SolverKind};
use crate::model::Pmc;
use crate::poly::{Polynomial, RationalFunction};
use crate::{LinSystem, RatFun};

/// Steady-state distribution of one bottom SCC.
#[derive(Clone, Debug)]
pub struct SteadyState {
    pub states: Vec<usize>,
    pub zeta: Vec<RatFun>,
}

#[derive(Clone, Debug)]
pub struct MeanPayoffResult {
    pub values: Vec<RatFun>,
    pub steady: Vec<SteadyState>,
}

/// Stationary distribution of the bottom SCC `states`. A trap is absorbing
/// and gets all the mass.
pub fn steady_state(m: &Pmc, states: &[usize], solver: SolverKind) -> Result<SteadyState> {
    let arena = m.arena();
    let k = states.len();
    if k == 1 && m.is_trap(states[0]) {
        return Ok(SteadyState {
            states: states.to_vec(),
            zeta: vec![RationalFunction::one(arena)],
        });
    }
    let pos = |s: usize| states.iter().position(|&x| x == s);
    // Row t: sum_s zeta_s P(s,t) - zeta_t = 0; the last row is sum zeta = 1.
    let mut a = vec![vec![Polynomial::zero(arena); k]; k];
    for (j, &s) in states.iter().enumerate() {
        a[j][j] = -Polynomial::one(arena);
        for (&t, p) in m.successors(s) {
            let i = pos(t).ok_or_else(|| Error::Invariant(format!("{} leaves its bottom SCC", m.state_name(s))))?;
            a[i][j] = &a[i][j] + p;
        }
    }
    a[k - 1] = vec![Polynomial::one(arena); k];
    let mut b = vec![Polynomial::zero(arena); k];
    b[k - 1] = Polynomial::one(arena);
    let sys = LinSystem::new(arena, a, b)?;
    let zeta = match solve(&sys, solver) {
        Ok(sol) => sol.entries,
        Err(Error::Singular) => {
            return Err(Error::Invariant("singular steady-state system".to_string()));
        }
        Err(e) => return Err(e),
    };
    Ok(SteadyState {
        states: states.to_vec(),
        zeta,
    })
}

/// `E_s(MP(T)) = Σ_B Pr_s(◇B) · Σ_{t ∈ B ∩ T} ζ_t · wgt(t)` over the bottom
/// SCCs `B`.
pub fn mean_payoff(m: &Pmc, target: &[bool], solver: SolverKind) -> Result<MeanPayoffResult> {
    let arena = m.arena();
    let n = m.num_states();
    let gi = m.graph_info();
    let mut values = vec![RationalFunction::zero(arena); n];
    let mut steady = Vec::new();
    for b in gi.bsccs() {
        let ss = steady_state(m, b, solver)?;
        let mut mp = RationalFunction::zero(arena);
        for (&t, z) in ss.states.iter().zip(&ss.zeta) {
            if target[t] && !m.weight(t).is_zero() {
                mp = mp.add(&z.mul_poly(m.weight(t))).simplify();
            }
        }
        steady.push(ss);
        if mp.is_zero() {
            continue;
        }
        let mut in_b = vec![false; n];
        for &s in b {
            in_b[s] = true;
        }
        let pr = super::reach(m, &in_b, solver)?;
        for s in 0..n {
            if !pr.zero_states[s] {
                values[s] = values[s].add(&pr.values[s].mul(&mp)).simplify();
            }
        }
    }
    Ok(MeanPayoffResult { values, steady })
}

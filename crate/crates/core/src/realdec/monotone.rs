use std::collections::BTreeSet;

use super::{solve_constraint, Rel, SemiSet1D};
use crate::error::{Error, Result};
use crate::model::Pmc;

/// Edges whose probability never decreases as the parameter grows on `X`,
/// and the states every incoming path of which uses only such edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneInfo {
    pub e_plus: BTreeSet<(usize, usize)>,
    pub s_plus: BTreeSet<usize>,
}

pub fn monotone_info(m: &Pmc, x: &SemiSet1D) -> Result<MonotoneInfo> {
    if m.num_params() > 1 {
        return Err(Error::Unsupported(format!(
            "monotonicity analysis needs at most one parameter, model has {}",
            m.num_params()
        )));
    }
    let mut e_plus = BTreeSet::new();
    for (s, t, p) in m.edges() {
        let increasing = if m.num_params() == 0 {
            true
        } else {
            solve_constraint(&p.derivative(0), Rel::Lt, x)?.is_empty()
        };
        if increasing {
            e_plus.insert((s, t));
        }
    }
    let n = m.num_states();
    let mut tainted = vec![false; n];
    for (s, t, _) in m.edges() {
        if !e_plus.contains(&(s, t)) {
            tainted[t] = true;
        }
    }
    let tainted = m.reach_forward(&tainted);
    let s_plus = (0..n).filter(|&s| !tainted[s]).collect();
    Ok(MonotoneInfo { e_plus, s_plus })
}

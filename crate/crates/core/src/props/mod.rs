//! Quantitative properties of parametric Markov chains as rational
//! functions: constrained reachability, expected accumulated weight and
//! expected mean payoff.

mod expectation;
mod meanpayoff;
mod until;

pub use expectation::{expected_weight, expected_weight_all, ExpectationResult};
pub use meanpayoff::{mean_payoff, steady_state, MeanPayoffResult, SteadyState};
pub use until::{reach, until, until_system, ReachResult, UntilSystem};

use crate::model::Pmc;

/// States from which `target` is reached with probability one, decided on
/// the graph alone.
pub fn sure_states(m: &Pmc, target: &[bool]) -> Vec<bool> {
    let n = m.num_states();
    let may = m.reach_backward(target, &vec![true; n]);
    let never: Vec<bool> = may.iter().map(|&u| !u).collect();
    let not_target: Vec<bool> = target.iter().map(|&t| !t).collect();
    let may_fail = m.reach_backward(&never, &not_target);
    may_fail.iter().map(|&f| !f).collect()
}

#[cfg(test)]
pub(crate) mod tests;

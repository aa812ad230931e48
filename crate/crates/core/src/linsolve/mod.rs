//! Solvers for parametric linear systems `A·p = b` over polynomial entries.

mod bareiss;
mod cramer;
mod dense;
mod rfgcd;
mod system;

pub use bareiss::{solve_bareiss, solve_bareiss_scc, solve_naive_ff};
pub use cramer::{cramer_oracle, cramer_oracle_bounded, det_cofactor, DEFAULT_CRAMER_BOUND};
pub use dense::{solve_dense, solve_param_rhs};
pub use rfgcd::solve_rf_gcd;
pub use system::{ParamLinSystem, Solution, SolveTrace, SolverKind, StepRecord};

use crate::error::Result;
use crate::poly::Scalar;

pub fn solve<C: Scalar>(sys: &ParamLinSystem<C>, kind: SolverKind) -> Result<Solution<C>> {
    match kind {
        SolverKind::Bareiss => solve_bareiss(sys),
        SolverKind::BareissScc => solve_bareiss_scc(sys),
        SolverKind::NaiveFf => solve_naive_ff(sys),
        SolverKind::RfGcd => solve_rf_gcd(sys),
        SolverKind::Cramer => cramer_oracle(sys),
    }
}

#[cfg(test)]
mod tests;

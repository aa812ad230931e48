//! PCTL with expectation and comparison operators: syntax, a shared-node
//! formula representation, model checking at fixed valuations, and symbolic
//! satisfaction sets over the admissible set of single-parameter models.

mod ast;
mod concrete;
mod dag;
mod decide;
mod parse;
mod symbolic;

pub use ast::{Ast, PathAst, TermAst};
pub use concrete::{
    acc_weight, bottom_components, check_concrete, check_concrete_all, cmp_extended, mean_payoff, next_prob,
    stationary, until_prob, Extended,
};
pub use dag::{Formula, Node, NodeId, Path, PathRef, Term};
pub use decide::{
    check_at, fragment_violation, mc_exists_univar, mc_forall_univar, mc_monotone_univar, mc_nonnested_univar, Answer,
};
pub use parse::parse_ast;
pub use symbolic::{sat_all_univar, sat_all_univar_with, Cell, CellDecomposition, CellKind, SatPair, SatTable};

/// Parses a state formula.
pub fn parse_formula(text: &str) -> crate::Result<Formula> {
    Formula::parse(text)
}

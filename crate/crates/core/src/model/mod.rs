//! Parametric Markov chains: data model, file format, graph analysis,
//! admissibility and model transformations.

mod admissible;
mod format;
mod graph;
mod pmc;
mod transform;

pub use admissible::Violation;
pub use graph::GraphInfo;
pub use pmc::{Constraint, Pmc};
pub use transform::{imc_to_pmc, ConcreteMc, Interval};

pub use crate::realdec::Rel;

#[cfg(test)]
mod tests;

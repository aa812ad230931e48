//! Univariate real algebra: Sturm sequences, root isolation, real algebraic
//! numbers and finite unions of points and open intervals.

mod algebraic;
mod monotone;
mod rel;
mod semiset;
mod sturm;
mod unipoly;

pub use algebraic::AlgebraicNumber;
pub use monotone::{monotone_info, MonotoneInfo};
pub use rel::Rel;
pub use semiset::{rational_inside, solve_constraint, solve_constraint_uni, Bound, Component, SemiSet1D};
pub use sturm::{cauchy_bound, isolate_roots, simplest_between, sturm_count, sturm_sequence, Endpoint};
pub use unipoly::UniPoly;

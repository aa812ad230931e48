//! Benchmark model generators, random instances and the solver comparison
//! harness.

mod gen;
mod harness;
pub mod random;

pub use gen::{gen_complete, gen_expfam, gen_ij, GenSpec};
pub use harness::{run_bench, BenchReport, BenchRun, CheckMethod, CrossCheck, Verdict, CROSS_TERM_LIMIT};

#[cfg(test)]
mod tests;

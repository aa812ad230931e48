//! Exact symbolic analysis of parametric Markov chains.
//!
//! Reachability probabilities, expected accumulated weights and mean payoffs
//! are computed as rational functions by fraction-free (Bareiss) elimination
//! over sparse multivariate polynomials with rational coefficients. For
//! single-parameter models, PCTL with expectation and comparison operators is
//! decided symbolically over the admissible parameter set.
//!
//! The polynomial and elimination layers are generic over [`Scalar`]; the
//! model-checking layers fix the coefficients to [`Rational`].

pub mod bench;
pub mod error;
pub mod linsolve;
pub mod model;
pub mod pctl;
pub mod poly;
pub mod props;
pub mod realdec;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, RationalFunction, Scalar, Valuation, VarArena};

pub type Rational = num_rational::BigRational;
pub type Poly = Polynomial<Rational>;
pub type RatFun = RationalFunction<Rational>;
pub type LinSystem = linsolve::ParamLinSystem<Rational>;
pub type Solution = linsolve::Solution<Rational>;

pub type PolyF64 = Polynomial<f64>;
pub type RatFunF64 = RationalFunction<f64>;
pub type LinSystemF64 = linsolve::ParamLinSystem<f64>;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

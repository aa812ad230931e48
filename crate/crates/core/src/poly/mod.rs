//! Exact polynomial arithmetic: variable arenas, sparse multivariate
//! polynomials, rational functions and univariate gcd.

mod arena;
mod gcd;
mod monomial;
mod parse;
mod polynomial;
mod ratfun;
mod scalar;
mod valuation;

pub use arena::VarArena;
pub use gcd::{common_univariate_var, gcd_univariate};
pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ratfun::RationalFunction;
pub use scalar::{parse_rational, Scalar};
pub use valuation::Valuation;

//! Exact arithmetic: scalars, polynomials, rational functions, matrices.

pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod scalar;

pub use matrix::{Matrix, Signature};
pub use poly::{Monomial, Polynomial};
pub use ratfun::RationalFunction;
pub use scalar::{Rational, Scalar, Sign};

//! Exact arithmetic: Laurent polynomials, rational functions and matrices over them.

mod laurent;
mod matrix;
mod ratfunc;

pub use laurent::{Exponent, ExactRational, LaurentPoly, MonomialImage};
pub use matrix::RepMatrix;
pub use ratfunc::RationalFunction;

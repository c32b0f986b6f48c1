//! Exact linear representations of the braid groups.
//!
//! The crate provides the Burau and Lawrence-Krammer-Bigelow (LKB) matrices
//! over Laurent polynomial rings, Garside combinatorics of simple braids,
//! a word-problem solver built on the faithful LKB representation, the
//! length function with respect to simple braids, and the Bratteli diagram
//! of the Birman-Murakami-Wenzl tower.

pub mod arith;
pub mod bmw;
pub mod braid;
pub mod burau;
pub mod error;
pub mod garside;
pub mod lkb;
pub mod verify;

pub use arith::{ExactRational, LaurentPoly, MonomialImage, RationalFunction, RepMatrix};
pub use braid::{BraidWord, Permutation, RefPair};
pub use error::{Error, Result};
pub use garside::{HalfPermutation, NormalForm};

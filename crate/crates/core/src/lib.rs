//! Chromatic symmetric functions of labelled graphs centred at a vertex.
//!
//! The crate is layered: [`combinatorics`] indexes every basis, [`graphs`]
//! builds labelled graphs and counts acyclic orientations, [`sym`] and
//! [`ncsym`] are the commutative and noncommutative reference algebras,
//! [`ubcsym`] is the quotient keyed by `(λ, b)` types, and [`ubcqsym`] its
//! quasisymmetric extension keyed by marked compositions.
//!
//! All coefficients are exact rationals.

pub mod algebra;
pub mod combinatorics;
pub mod error;
mod expansion;
pub mod graphs;
pub mod json;
pub mod limits;
pub mod ncsym;
pub mod rational;
pub mod sym;
pub mod ubcqsym;
pub mod ubcsym;
pub mod verify;

pub use error::{CsfError, Result};
pub use rational::Q;

//! Twin vectors, cubic lattices and Hurwitz quaternions, in exact integer
//! arithmetic.
//!
//! Start with [`twins`] for the questions about orthogonal vectors of
//! equal length, and [`hurwitz`] for the quaternion arithmetic underneath.
//! Every closed-form count has an exhaustive counterpart in [`brute`].

pub mod arith;
pub mod brute;
pub mod census;
pub mod decomp;
pub mod error;
pub mod euler;
pub mod gaussian;
pub mod hurwitz;
pub mod lattice;
pub mod pythagoras;
pub mod twins;

#[doc = include_str!("../../../README.md")]
#[cfg(doctest)]
pub struct ReadmeDoctests;

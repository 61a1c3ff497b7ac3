//! Exact arithmetic for inductive valuations on polynomial rings via key
//! polynomials: Gauss, augmented, truncated and limit valuations over the
//! coefficient tower k → k(z) → k(z)(y), with Newton polygons, initial-form
//! support data, validators for the key-polynomial axioms, and an executable
//! depth-parameterized tower culminating in a limit key polynomial.

pub mod algebra;
pub mod initial_forms;
pub mod keycheck;
pub mod sample;
pub mod tower5;
pub mod valuations;
pub mod values;

pub use values::{ExtValue, RationalSubgroup};

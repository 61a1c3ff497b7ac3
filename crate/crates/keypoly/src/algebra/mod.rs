//! The coefficient tower, sparse polynomials, fractions, Euclidean division
//! and standard expansions.

pub mod expansion;
pub(crate) mod fastnum;
pub(crate) mod fastpoly;
pub mod frac;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod tower;

pub use expansion::{chain_expansion, phi_expansion, ChainExpansion, Expansion};
pub use frac::Frac;
pub use parse::{format_xpoly, parse_poly};
pub use poly::{poly_gcd, AlgebraError, Exp, FieldElem, Poly, Var};
pub use scalar::{is_prime, GroundField, Scalar};
pub use tower::{KElem, TowerCtx, TowerElem, XPoly, YPoly, ZPoly, ZRat};

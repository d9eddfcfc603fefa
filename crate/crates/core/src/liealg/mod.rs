//! Lie algebras from structure constants, invariant forms and quadratic pairs.

mod algebra;
mod form;
mod pair;

pub use algebra::{axpy, is_zero, unit, Coords, LieAlgebra};
pub use form::InvariantForm;
pub use pair::{Part, QuadraticPair, QuadraticSpace};

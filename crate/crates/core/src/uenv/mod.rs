//! Filtration-truncated enveloping algebras, symmetrization and the low-degree Duflo map.

mod duflo;
mod pbw;
mod poly;

pub use duflo::{
    casimir, casimir_symbol, duflo, duflo_inverse, sym_adjoint_action, sym_invariants, symmetrize, SymElement,
    DUFLO_WINDOW,
};
pub use pbw::{PbwElement, Slice, Uenv};
pub use poly::{Monomial, Poly};

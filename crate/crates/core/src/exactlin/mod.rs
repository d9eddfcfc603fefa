//! Exact sparse linear algebra over [`Scalar`](crate::Scalar).

mod dense;
mod echelon;
mod sparse;
mod subspace;

pub use dense::Matrix;
pub use echelon::{dependencies, express, kernel_vectors, rank, rref, solve, Echelon};
pub use sparse::{SparseMatrix, SparseVec};
pub use subspace::Subspace;

/// Null space of `m` in canonical form.
pub fn kernel(m: &SparseMatrix) -> Subspace {
    Subspace::kernel(m)
}

use super::echelon::{kernel_vectors, Echelon};
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear subspace of `F^ambient`, stored in canonical reduced echelon form.
///
/// Two subspaces compare equal exactly when their canonical bases coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub fn span<'a>(ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Result<Self> {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            if let Some(m) = v.max_index() {
                if m >= ambient {
                    return Err(Error::DimensionMismatch { expected: ambient, found: m + 1 });
                }
            }
            e.insert(v.clone());
        }
        Ok(Subspace { ambient, rows: e.canonical_rows() })
    }

    pub fn from_owned(ambient: usize, vectors: Vec<SparseVec>) -> Result<Self> {
        Subspace::span(ambient, vectors.iter())
    }

    /// Null space of `m`.
    pub fn kernel(m: &SparseMatrix) -> Subspace {
        Subspace::from_owned(m.ncols(), kernel_vectors(m)).expect("kernel vectors fit")
    }

    /// Column space of `m`.
    pub fn image(m: &SparseMatrix) -> Subspace {
        let t = m.transpose();
        Subspace::span(m.nrows(), t.rows()).expect("columns fit")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn matrix(&self) -> SparseMatrix {
        SparseMatrix::from_rows(self.ambient, self.rows.clone()).expect("rows fit")
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_rows(self.ambient, &self.rows)
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon().reduce(v).is_zero()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        let e = other.echelon();
        Ok(self.rows.iter().all(|r| e.reduce(r).is_zero()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Subspace::span(self.ambient, self.rows.iter().chain(other.rows.iter()))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let minus = Scalar::from_int(-1);
        let cols: Vec<SparseVec> =
            self.rows.iter().cloned().chain(other.rows.iter().map(|r| r.scale(&minus))).collect();
        let m = SparseMatrix::from_columns(self.ambient, &cols)?;
        let k = self.rows.len();
        let vecs: Vec<SparseVec> = kernel_vectors(&m)
            .into_iter()
            .map(|rel| {
                let mut acc = SparseVec::new();
                for (i, c) in rel.iter() {
                    if *i < k {
                        acc = acc.axpy(c, &self.rows[*i]);
                    }
                }
                acc
            })
            .collect();
        Subspace::from_owned(self.ambient, vecs)
    }

    /// Vectors of `outer` completing a basis of `self` to a basis of `outer`.
    pub fn quotient_basis(&self, outer: &Subspace) -> Result<Vec<SparseVec>> {
        if !self.is_subspace_of(outer)? {
            return Err(Error::AmbientMismatch("quotient of a non-contained subspace".into()));
        }
        let mut e = self.echelon();
        Ok(outer.rows.iter().filter(|r| e.insert((*r).clone())).cloned().collect())
    }

    pub fn is_direct_sum(&self, other: &Subspace) -> Result<bool> {
        Ok(self.dim() + other.dim() == self.sum(other)?.dim())
    }
}

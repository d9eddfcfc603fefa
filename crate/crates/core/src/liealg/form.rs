use super::algebra::{unit, Coords, LieAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{rank, SparseMatrix};
use crate::scalar::Scalar;

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantForm {
    gram: Vec<Vec<Scalar>>,
}

impl InvariantForm {
    pub fn new(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = gram.len();
        if let Some(r) = gram.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: r.len() });
        }
        Ok(InvariantForm { gram })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        InvariantForm { gram: rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[i][j]
    }

    pub fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += &(&(a * b) * &self.gram[i][j]);
            }
        }
        acc
    }

    /// Gram matrix of the form on the span of `vectors`.
    pub fn restrict(&self, vectors: &[Coords]) -> Vec<Vec<Scalar>> {
        vectors.iter().map(|x| vectors.iter().map(|y| self.pair(x, y)).collect()).collect()
    }

    pub fn check_symmetric(&self, g: &LieAlgebra) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                if self.gram[i][j] != self.gram[j][i] {
                    return Err(Error::NotSymmetric(g.label(i).into(), g.label(j).into()));
                }
            }
        }
        Ok(())
    }

    pub fn check_nondegenerate(&self) -> Result<()> {
        if rank(&SparseMatrix::from_dense(&self.gram)) != self.dim() {
            return Err(Error::DegenerateForm);
        }
        Ok(())
    }

    /// `<[x,y],z> + <y,[x,z]> = 0` on all basis triples.
    pub fn check_invariant(&self, g: &LieAlgebra) -> Result<()> {
        let n = g.dim();
        if n != self.dim() {
            return Err(Error::DimensionMismatch { expected: n, found: self.dim() });
        }
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                    let s = self.pair(&g.bracket(&x, &y), &z) + self.pair(&y, &g.bracket(&x, &z));
                    if !s.is_zero() {
                        return Err(Error::NotInvariant(g.label(i).into(), g.label(j).into(), g.label(k).into()));
                    }
                }
            }
        }
        Ok(())
    }
}

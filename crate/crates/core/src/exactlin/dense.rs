use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::sparse::{SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// Small dense exact matrix, used for module and spinor actions.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// The scalar `c` if `self == c·Id`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.rows != self.cols {
            return None;
        }
        let c = if self.rows == 0 { Scalar::zero() } else { self.get(0, 0).clone() };
        (*self == Matrix::scalar(self.rows, &c)).then_some(c)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Matrix) -> Matrix {
        &(self * other) + &(other * self)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs((0..self.rows).map(|i| {
            let s: Scalar = v.iter().map(|(j, x)| self.get(i, *j) * x).sum();
            (i, s)
        }))
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_dense(&self.to_rows())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut e = super::echelon::Echelon::new(2 * n);
        for i in 0..n {
            let mut row: Vec<Scalar> = self.data[i * n..(i + 1) * n].to_vec();
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            e.insert(SparseVec::from_dense(&row));
        }
        if e.rank() != n || e.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        let rows = e.canonical_rows();
        Some(Matrix::from_rows(rows.iter().map(|r| r.to_dense(2 * n)[n..].to_vec()).collect()))
    }

    /// Characteristic polynomial coefficients `c_0..c_n` of `det(t·Id − self)`, monic.
    pub fn char_poly(&self) -> Vec<Scalar> {
        // Faddeev–LeVerrier
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zero(n, n);
        for k in 1..=n {
            let mk = &(self * &m) + &Matrix::scalar(n, &coeffs[n - k + 1]);
            let amk = self * &mk;
            coeffs[n - k] = -(amk.trace() / Scalar::from_int(k as i64));
            m = mk;
        }
        coeffs
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut m = Matrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        m.data[idx] += &(a * b);
                    }
                }
            }
        }
        m
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.to_rows() {
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v: Vec<(usize, Scalar)> = pairs.into_iter().collect();
        v.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
        for (i, x) in v {
            match entries.last_mut() {
                Some((j, y)) if *j == i => *y += &x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Scalar::one())] }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    /// `self + c·other`
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Scalar::from_int(-1), other)
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let mut acc = Scalar::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += &(x * y);
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Restriction to indices `< len`.
    pub fn truncate(&self, len: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| *i < len).cloned().collect() }
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(i, x)| (i, x))).finish()
    }
}

/// Sparse matrix stored by rows.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![SparseVec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, data: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Result<Self> {
        for r in &rows {
            if let Some(m) = r.max_index() {
                if m >= cols {
                    return Err(Error::DimensionMismatch { expected: cols, found: m + 1 });
                }
            }
        }
        Ok(SparseMatrix { rows: rows.len(), cols, data: rows })
    }

    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Result<Self> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter() {
                if *i >= rows {
                    return Err(Error::DimensionMismatch { expected: rows, found: i + 1 });
                }
                buckets[*i].push((j, x.clone()));
            }
        }
        Ok(SparseMatrix {
            rows,
            cols: columns.len(),
            data: buckets.into_iter().map(|b| SparseVec { entries: b }).collect(),
        })
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix { rows: rows.len(), cols, data: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        self.data.iter().map(|r| r.to_dense(self.cols)).collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(j)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.nnz()).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.data.iter().enumerate() {
            for (j, x) in r.iter() {
                buckets[*j].push((i, x.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data: buckets.into_iter().map(|b| SparseVec { entries: b }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(self.data.iter().enumerate().map(|(i, r)| (i, r.dot(v))).filter(|(_, x)| !x.is_zero()))
    }

    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, x) in r.iter() {
                    acc = acc.axpy(x, &other.data[*k]);
                }
                acc
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[SparseMatrix]) -> Result<SparseMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: b.cols });
            }
            data.extend(b.data.iter().cloned());
        }
        Ok(SparseMatrix { rows: data.len(), cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_zero())
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{}", self.rows, self.cols)?;
        for (i, r) in self.data.iter().enumerate() {
            if !r.is_zero() {
                writeln!(f, "  {i}: {r:?}")?;
            }
        }
        Ok(())
    }
}

use std::collections::HashMap;

use super::sparse::{SparseMatrix, SparseVec};
use crate::scalar::Scalar;

/// Incrementally built reduced row echelon form.
///
/// Every stored row has leading coefficient 1 at its pivot column and a zero
/// in every other row's pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    width: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn from_rows<'a>(width: usize, rows: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(width);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Scalar)> =
            v.iter().filter_map(|(c, x)| self.pivot_row.get(c).map(|&r| (r, x.clone()))).collect();
        let mut out = v.clone();
        for (r, x) in hits {
            out = out.axpy(&-x, &self.rows[r]);
        }
        out
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(&v);
        let Some((p, lead)) = v.leading().cloned() else {
            return false;
        };
        let v = v.scale(&lead.inv().expect("nonzero leading entry"));
        for row in self.rows.iter_mut() {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.axpy(&-c, &v);
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(v);
        true
    }

    /// Rows sorted by pivot column: the canonical form of the row space.
    pub fn canonical_rows(&self) -> Vec<SparseVec> {
        let mut pivots: Vec<(usize, usize)> = self.pivot_row.iter().map(|(&c, &r)| (c, r)).collect();
        pivots.sort();
        pivots.into_iter().map(|(_, r)| self.rows[r].clone()).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort();
        p
    }

    fn pivot_entries(&self) -> impl Iterator<Item = (usize, &SparseVec)> {
        self.pivot_row.iter().map(move |(&c, &r)| (c, &self.rows[r]))
    }
}

/// Row echelon form of a whole matrix.
pub fn rref(m: &SparseMatrix) -> Echelon {
    Echelon::from_rows(m.ncols(), m.rows())
}

pub fn rank(m: &SparseMatrix) -> usize {
    rref(m).rank()
}

/// Null space basis, one vector per free column (not yet canonicalized).
pub fn kernel_vectors(m: &SparseMatrix) -> Vec<SparseVec> {
    let e = rref(m);
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.ncols()];
    for (p, row) in e.pivot_entries() {
        for (c, x) in row.iter() {
            if *c != p {
                by_free[*c].push((p, -x));
            }
        }
    }
    (0..m.ncols())
        .filter(|c| !e.is_pivot(*c))
        .map(|f| {
            let mut pairs = std::mem::take(&mut by_free[f]);
            pairs.push((f, Scalar::one()));
            SparseVec::from_pairs(pairs)
        })
        .collect()
}

/// A particular solution of `m·x = b`, or `None` when `b` is outside the column space.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = m.ncols();
    let mut e = Echelon::new(n + 1);
    for i in 0..m.nrows() {
        let bi = b.get(i);
        let row = if bi.is_zero() {
            m.row(i).clone()
        } else {
            let mut pairs: Vec<(usize, Scalar)> = m.row(i).entries().to_vec();
            pairs.push((n, bi));
            SparseVec::from_pairs(pairs)
        };
        e.insert(row);
    }
    if b.max_index().is_some_and(|i| i >= m.nrows()) {
        return None;
    }
    if e.is_pivot(n) {
        return None;
    }
    Some(SparseVec::from_pairs(e.pivot_entries().map(|(p, row)| (p, row.get(n))).filter(|(_, x)| !x.is_zero())))
}

/// Coefficients expressing `v` in terms of `vectors`, if `v` lies in their span.
pub fn express(len: usize, vectors: &[SparseVec], v: &SparseVec) -> Option<SparseVec> {
    let m = SparseMatrix::from_columns(len, vectors).ok()?;
    solve(&m, v)
}

/// All linear relations among `vectors`, as coefficient vectors.
pub fn dependencies(len: usize, vectors: &[SparseVec]) -> Vec<SparseVec> {
    match SparseMatrix::from_columns(len, vectors) {
        Ok(m) => kernel_vectors(&m),
        Err(_) => Vec::new(),
    }
}

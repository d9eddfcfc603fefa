use std::collections::HashMap;
use std::sync::Mutex;

use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::exactlin::{SparseMatrix, SparseVec, Subspace};
use crate::liealg::{Coords, LieAlgebra};
use crate::scalar::Scalar;

/// An element of `U(g)` in PBW normal order (`x_1^{k_1} ⋯ x_n^{k_n}`).
pub type PbwElement = Poly;

/// The filtration-truncated enveloping algebra `U(g)_{≤cap}`.
#[derive(Debug)]
pub struct Uenv {
    lie: LieAlgebra,
    cap: usize,
    cache: Mutex<HashMap<(Monomial, usize), Poly>>,
}

impl Clone for Uenv {
    fn clone(&self) -> Self {
        Uenv::new(self.lie.clone(), self.cap)
    }
}

impl Uenv {
    pub fn new(lie: LieAlgebra, cap: usize) -> Self {
        Uenv { lie, cap, cache: Mutex::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.lie.labels()
    }

    pub fn one(&self) -> PbwElement {
        Poly::one(self.dim())
    }

    pub fn zero(&self) -> PbwElement {
        Poly::zero(self.dim())
    }

    pub fn generator(&self, i: usize) -> PbwElement {
        Poly::generator(self.dim(), i)
    }

    /// `u_x` for `x ∈ g` in coordinates.
    pub fn vector(&self, x: &[Scalar]) -> PbwElement {
        Poly::vector(x)
    }

    fn check(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            return Err(Error::FiltrationOverflow { degree, cap: self.cap });
        }
        Ok(())
    }

    /// Normal form of `m · x_i`.
    fn mul_generator(&self, m: &Monomial, i: usize) -> Poly {
        let n = self.dim();
        match m.last_index() {
            None => return Poly::monomial(m.with_incremented(i), Scalar::one()),
            Some(j) if j <= i => return Poly::monomial(m.with_incremented(i), Scalar::one()),
            _ => {}
        }
        let key = (m.clone(), i);
        if let Some(p) = self.cache.lock().expect("cache lock").get(&key) {
            return p.clone();
        }
        let j = m.last_index().expect("nonempty");
        let head = m.with_decremented(j).expect("positive");
        // head·x_j·x_i = (head·x_i)·x_j + head·[x_j, x_i]
        let mut out = Poly::zero(n);
        for (t, c) in self.mul_generator(&head, i).terms() {
            out.add_scaled(c, &self.mul_generator(t, j));
        }
        for (k, c) in self.lie.bracket_basis(j, i) {
            out.add_scaled(c, &self.mul_generator(&head, *k));
        }
        self.cache.lock().expect("cache lock").insert(key, out.clone());
        out
    }

    fn mul_unchecked(&self, x: &Poly, y: &Poly) -> Poly {
        let n = self.dim();
        let mut out = Poly::zero(n);
        for (b, d) in y.terms() {
            let mut acc = x.clone();
            for i in b.word() {
                let mut next = Poly::zero(n);
                for (t, c) in acc.terms() {
                    next.add_scaled(c, &self.mul_generator(t, i));
                }
                acc = next;
            }
            out.add_scaled(d, &acc);
        }
        out
    }

    /// Normal-ordered product; errors if the degrees add past the cap.
    pub fn mul(&self, x: &PbwElement, y: &PbwElement) -> Result<PbwElement> {
        if !x.is_zero() && !y.is_zero() {
            self.check(x.degree() + y.degree())?;
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub fn commutator(&self, x: &PbwElement, y: &PbwElement) -> Result<PbwElement> {
        Ok(self.mul(x, y)?.minus(&self.mul(y, x)?))
    }

    /// Ordered product of degree-one elements `u_{v_1} ⋯ u_{v_k}`.
    pub fn word(&self, vectors: &[Coords]) -> Result<PbwElement> {
        self.check(vectors.len())?;
        let mut acc = self.one();
        for v in vectors {
            acc = self.mul_unchecked(&acc, &self.vector(v));
        }
        Ok(acc)
    }

    /// `ad a` extended as a derivation; preserves the filtration degree.
    pub fn adjoint_action(&self, a: &[Scalar], u: &PbwElement) -> PbwElement {
        let n = self.dim();
        let mut out = Poly::zero(n);
        for (m, c) in u.terms() {
            let w = m.word();
            for pos in 0..w.len() {
                let mut acc = Poly::one(n);
                for (k, &i) in w.iter().enumerate() {
                    let f = if k == pos {
                        let mut unit = vec![Scalar::zero(); n];
                        unit[i] = Scalar::one();
                        Poly::vector(&self.lie.bracket(a, &unit))
                    } else {
                        Poly::generator(n, i)
                    };
                    acc = self.mul_unchecked(&acc, &f);
                }
                out.add_scaled(c, &acc);
            }
        }
        out
    }

    /// Basis of `U(g)_{≤d}`.
    pub fn basis_up_to(&self, d: usize) -> Vec<Monomial> {
        Monomial::up_to(self.dim(), d)
    }

    /// The degree-`≤d` slice of `U(g)^{a}` for the given acting vectors.
    pub fn invariants(&self, acting: &[Coords], d: usize) -> Vec<PbwElement> {
        let basis = self.basis_up_to(d);
        let index = Slice::new(basis);
        let mut blocks = Vec::new();
        for a in acting {
            let cols: Vec<SparseVec> = index
                .monomials()
                .iter()
                .map(|m| index.to_vec(&self.adjoint_action(a, &Poly::monomial(m.clone(), Scalar::one()))))
                .collect();
            blocks.push(SparseMatrix::from_columns(index.len(), &cols).expect("slice closed"));
        }
        if blocks.is_empty() {
            return index.monomials().iter().map(|m| Poly::monomial(m.clone(), Scalar::one())).collect();
        }
        let stacked = SparseMatrix::vstack(&blocks).expect("same width");
        Subspace::kernel(&stacked).basis().iter().map(|v| index.from_vec(self.dim(), v)).collect()
    }
}

/// Coordinates for a finite set of monomials.
#[derive(Clone, Debug)]
pub struct Slice {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Slice {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Slice { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Panics if `p` has a term outside the slice.
    pub fn to_vec(&self, p: &Poly) -> SparseVec {
        SparseVec::from_pairs(
            p.terms().iter().map(|(m, c)| {
                (self.position(m).unwrap_or_else(|| panic!("monomial {m:?} outside the slice")), c.clone())
            }),
        )
    }

    pub fn from_vec(&self, n: usize, v: &SparseVec) -> Poly {
        Poly::from_terms(n, v.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())))
    }
}

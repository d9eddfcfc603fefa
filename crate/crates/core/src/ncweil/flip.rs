use crate::cliff::{bits, degree, wedge_sign, Clifford, ExteriorElement, Mask};
use crate::exactlin::{SparseMatrix, SparseVec, Subspace};
use crate::scalar::Scalar;

/// The super tensor square `Λ(V) ⊗ Λ(V)` with its diagonal contractions.
///
/// Basis tensors `ω_a ⊗ ω_b` (monomial masks `a`, `b`) have coordinate `a·2^n + b`.
#[derive(Clone, Debug)]
pub struct TensorSquare {
    cl: Clifford,
}

impl TensorSquare {
    pub fn new(cl: Clifford) -> Self {
        TensorSquare { cl }
    }

    pub fn dim_factor(&self) -> usize {
        1 << self.cl.dim()
    }

    pub fn len(&self) -> usize {
        self.dim_factor() * self.dim_factor()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, a: Mask, b: Mask) -> usize {
        a as usize * self.dim_factor() + b as usize
    }

    pub fn split(&self, i: usize) -> (Mask, Mask) {
        ((i / self.dim_factor()) as Mask, (i % self.dim_factor()) as Mask)
    }

    /// `ω ⊗ η` for exterior elements.
    pub fn tensor(&self, w: &ExteriorElement, e: &ExteriorElement) -> SparseVec {
        let mut pairs = Vec::new();
        for (a, x) in w.terms() {
            for (b, y) in e.terms() {
                pairs.push((self.index(*a, *b), x * y));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// `i_v(ω⊗η) = ī_vω⊗η + (−1)^{|ω|} ω⊗ī_vη`.
    pub fn contraction(&self, v: &[Scalar]) -> SparseMatrix {
        let n = self.cl.dim();
        let cols: Vec<SparseVec> = (0..self.len())
            .map(|i| {
                let (a, b) = self.split(i);
                let wa = ExteriorElement::monomial(n, a, Scalar::one());
                let wb = ExteriorElement::monomial(n, b, Scalar::one());
                let first = self.tensor(&self.cl.contract(v, &wa), &wb);
                let sign = if degree(a) % 2 == 1 { Scalar::from_int(-1) } else { Scalar::one() };
                first.axpy(&sign, &self.tensor(&wa, &self.cl.contract(v, &wb)))
            })
            .collect();
        SparseMatrix::from_columns(self.len(), &cols).expect("square")
    }

    /// `(ω⊗η)(ω'⊗η') = (−1)^{|η||ω'|} (ω∧ω') ⊗ (η∧η')`.
    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, c) in x.iter() {
            let (a, b) = self.split(*i);
            for (j, d) in y.iter() {
                let (a2, b2) = self.split(*j);
                let (Some(s1), Some(s2)) = (wedge_sign(a, a2), wedge_sign(b, b2)) else { continue };
                let mut neg = s1 ^ s2;
                if degree(b) % 2 == 1 && degree(a2) % 2 == 1 {
                    neg = !neg;
                }
                let v = c * d;
                pairs.push((self.index(a | a2, b | b2), if neg { -v } else { v }));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// `σ(ω⊗η) = (−1)^{|ω||η|} η⊗ω`.
    pub fn flip(&self, x: &SparseVec) -> SparseVec {
        SparseVec::from_pairs(x.iter().map(|(i, c)| {
            let (a, b) = self.split(*i);
            let neg = degree(a) % 2 == 1 && degree(b) % 2 == 1;
            (self.index(b, a), if neg { -c.clone() } else { c.clone() })
        }))
    }

    /// Total degree of a basis tensor.
    pub fn total_degree(&self, i: usize) -> usize {
        let (a, b) = self.split(i);
        degree(a) + degree(b)
    }

    /// Elements killed by every `i_v`, restricted to total degree `k` when given.
    pub fn horizontal(&self, total: Option<usize>) -> Subspace {
        let n = self.cl.dim();
        let mut blocks: Vec<SparseMatrix> = (0..n).map(|k| self.contraction(&crate::liealg::unit(n, k))).collect();
        if let Some(k) = total {
            let rows: Vec<SparseVec> =
                (0..self.len()).filter(|&i| self.total_degree(i) != k).map(SparseVec::unit).collect();
            blocks.push(SparseMatrix::from_rows(self.len(), rows).expect("unit rows"));
        }
        Subspace::kernel(&SparseMatrix::vstack(&blocks).expect("same width"))
    }

    /// `δv = v⊗1 − 1⊗v` for each basis vector.
    pub fn deltas(&self) -> Vec<SparseVec> {
        let n = self.cl.dim();
        (0..n)
            .map(|k| {
                let v = self.cl.generator(k);
                self.tensor(&v, &self.cl.one()).sub(&self.tensor(&self.cl.one(), &v))
            })
            .collect()
    }

    /// The subalgebra generated by the `δv`: products over subsets (each `δv` squares to zero
    /// and they anticommute).
    pub fn delta_subalgebra(&self) -> Subspace {
        let deltas = self.deltas();
        let n = deltas.len();
        let one = self.tensor(&self.cl.one(), &self.cl.one());
        let products: Vec<SparseVec> =
            (0..1u64 << n).map(|s| bits(s).fold(one.clone(), |acc, k| self.mul(&acc, &deltas[k]))).collect();
        Subspace::span(self.len(), &products).expect("ambient")
    }
}

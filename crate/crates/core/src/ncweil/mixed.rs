use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::cliff::{bits, degree, Clifford, ExteriorElement, Mask};
use crate::error::Result;
use crate::exactlin::{SparseMatrix, SparseVec, Subspace};
use crate::liealg::{Coords, InvariantForm, LieAlgebra, QuadraticSpace};
use crate::scalar::Scalar;
use crate::uenv::{Monomial, Poly, Uenv};

/// An element of `A ⊗ Λ(W)` stored as one polynomial coefficient per exterior monomial.
///
/// `A` is `U(g)` or `S(g)` depending on the algebra the element belongs to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mixed {
    nu: usize,
    nw: usize,
    terms: BTreeMap<Mask, Poly>,
}

impl Mixed {
    pub fn zero(nu: usize, nw: usize) -> Self {
        Mixed { nu, nw, terms: BTreeMap::new() }
    }

    /// `p ⊗ ω`.
    pub fn tensor(p: &Poly, w: &ExteriorElement) -> Self {
        let mut out = Mixed::zero(p.nvars(), w.dim());
        for (m, c) in w.terms() {
            out.add_poly(*m, &p.scale(c));
        }
        out
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn nw(&self) -> usize {
        self.nw
    }

    pub fn terms(&self) -> &BTreeMap<Mask, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient polynomial of an exterior monomial.
    pub fn coeff(&self, m: Mask) -> Poly {
        self.terms.get(&m).cloned().unwrap_or_else(|| Poly::zero(self.nu))
    }

    pub fn add_poly(&mut self, m: Mask, p: &Poly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(|| Poly::zero(p.nvars()));
        entry.add_scaled(&Scalar::one(), p);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Mixed) {
        if c.is_zero() {
            return;
        }
        for (m, p) in &other.terms {
            self.add_poly(*m, &p.scale(c));
        }
    }

    pub fn plus(&self, other: &Mixed) -> Mixed {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn minus(&self, other: &Mixed) -> Mixed {
        let mut out = self.clone();
        out.add_scaled(&Scalar::from_int(-1), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Mixed {
        let mut out = Mixed::zero(self.nu, self.nw);
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Mixed {
        self.scale(&Scalar::from_int(-1))
    }

    /// `Some(true)` if every term is odd, `Some(false)` if every term is even, `None` if mixed or zero.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|m| degree(*m) % 2 == 1);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// The even (`odd = false`) or odd part.
    pub fn parity_part(&self, odd: bool) -> Mixed {
        Mixed {
            nu: self.nu,
            nw: self.nw,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (degree(**m) % 2 == 1) == odd)
                .map(|(m, p)| (*m, p.clone()))
                .collect(),
        }
    }

    /// Highest polynomial degree over all terms.
    pub fn u_degree(&self) -> usize {
        self.terms.values().map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Applies a linear map of the polynomial slot.
    pub fn map_u(&self, f: impl Fn(&Poly) -> Poly) -> Mixed {
        let mut out = Mixed::zero(self.nu, self.nw);
        for (m, p) in &self.terms {
            out.add_poly(*m, &f(p));
        }
        out
    }

    /// Applies a linear map of the exterior slot, given on monomials.
    pub fn map_w(&self, f: impl Fn(&ExteriorElement) -> ExteriorElement) -> Mixed {
        let mut out = Mixed::zero(self.nu, self.nw);
        for (m, p) in &self.terms {
            let image = f(&ExteriorElement::monomial(self.nw, *m, Scalar::one()));
            out.nw = image.dim();
            for (m2, c) in image.terms() {
                out.add_poly(*m2, &p.scale(c));
            }
        }
        out
    }

    /// The `A`-coefficient of `1 ∈ Λ(W)`.
    pub fn augmentation(&self) -> Poly {
        self.coeff(0)
    }

    pub fn format_with(&self, u_labels: &[String], w_labels: &[String]) -> String {
        let mut parts: Vec<(Mask, Monomial, Scalar)> = Vec::new();
        for (m, p) in &self.terms {
            for (mono, c) in p.terms() {
                parts.push((*m, mono.clone(), c.clone()));
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.sort_by(|a, b| {
            (std::cmp::Reverse(a.1.degree()), std::cmp::Reverse(degree(a.0)), &a.1, a.0).cmp(&(
                std::cmp::Reverse(b.1.degree()),
                std::cmp::Reverse(degree(b.0)),
                &b.1,
                b.0,
            ))
        });
        let mut s = String::new();
        for (k, (m, mono, c)) in parts.iter().enumerate() {
            let u = if mono.is_one() { "1".to_string() } else { mono.format_with(u_labels) };
            let w: Vec<&str> = bits(*m).map(|i| w_labels[i].as_str()).collect();
            let w = if w.is_empty() { "1".to_string() } else { w.join("∧") };
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) if c.is_rational() => (true, b.to_string()),
                _ if !c.is_rational() => (false, format!("({cs})")),
                _ => (false, cs),
            };
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if body != "1" {
                let _ = write!(s, "{body} ");
            }
            let _ = write!(s, "{u}⊗{w}");
        }
        s
    }
}

/// Coordinates on a finite set of basis tensors `monomial ⊗ mask`.
#[derive(Clone, Debug)]
pub struct MixedSlice {
    nu: usize,
    nw: usize,
    keys: Vec<(Monomial, Mask)>,
    index: HashMap<(Monomial, Mask), usize>,
}

impl MixedSlice {
    pub fn new(nu: usize, nw: usize, monomials: &[Monomial], masks: &[Mask]) -> Self {
        let mut keys = Vec::with_capacity(monomials.len() * masks.len());
        for m in monomials {
            for w in masks {
                keys.push((m.clone(), *w));
            }
        }
        let index = keys.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        MixedSlice { nu, nw, keys, index }
    }

    /// All `monomial ⊗ mask` with monomial degree at most `d` and any mask.
    pub fn up_to(nu: usize, nw: usize, d: usize) -> Self {
        let masks: Vec<Mask> = (0..1u64 << nw).collect();
        MixedSlice::new(nu, nw, &Monomial::up_to(nu, d), &masks)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[(Monomial, Mask)] {
        &self.keys
    }

    pub fn basis_element(&self, i: usize) -> Mixed {
        let (m, w) = &self.keys[i];
        let mut out = Mixed::zero(self.nu, self.nw);
        out.add_poly(*w, &Poly::monomial(m.clone(), Scalar::one()));
        out
    }

    pub fn basis(&self) -> Vec<Mixed> {
        (0..self.len()).map(|i| self.basis_element(i)).collect()
    }

    /// Coordinates, or `None` when `x` has a term outside the slice.
    pub fn try_to_vec(&self, x: &Mixed) -> Option<SparseVec> {
        let mut pairs = Vec::new();
        for (w, p) in x.terms() {
            for (m, c) in p.terms() {
                pairs.push((*self.index.get(&(m.clone(), *w))?, c.clone()));
            }
        }
        Some(SparseVec::from_pairs(pairs))
    }

    /// Panics if `x` has a term outside the slice.
    pub fn to_vec(&self, x: &Mixed) -> SparseVec {
        self.try_to_vec(x).unwrap_or_else(|| panic!("element outside the slice"))
    }

    pub fn from_vec(&self, v: &SparseVec) -> Mixed {
        let mut out = Mixed::zero(self.nu, self.nw);
        for (i, c) in v.iter() {
            let (m, w) = &self.keys[*i];
            out.add_poly(*w, &Poly::monomial(m.clone(), c.clone()));
        }
        out
    }

    /// The coordinate subspace spanned by keys with monomial degree at most `d`.
    pub fn filtration(&self, d: usize) -> Subspace {
        let vecs: Vec<SparseVec> = self
            .keys
            .iter()
            .enumerate()
            .filter(|(_, (m, _))| m.degree() <= d)
            .map(|(i, _)| SparseVec::unit(i))
            .collect();
        Subspace::from_owned(self.len(), vecs).expect("unit vectors")
    }

    /// The matrix of a linear map whose images lie in `target`.
    pub fn matrix_of(&self, target: &MixedSlice, f: impl Fn(&Mixed) -> Mixed) -> SparseMatrix {
        let cols: Vec<SparseVec> = (0..self.len()).map(|i| target.to_vec(&f(&self.basis_element(i)))).collect();
        SparseMatrix::from_columns(target.len(), &cols).expect("column lengths")
    }

    /// The subspace annihilated by every map in `ops` (each mapping into `target`).
    pub fn common_kernel(&self, target: &MixedSlice, ops: &[&dyn Fn(&Mixed) -> Mixed]) -> Subspace {
        if ops.is_empty() {
            return Subspace::full(self.len());
        }
        let blocks: Vec<SparseMatrix> = ops.iter().map(|f| self.matrix_of(target, f)).collect();
        Subspace::kernel(&SparseMatrix::vstack(&blocks).expect("same width"))
    }
}

/// `U(g) ⊗ Cl(W)` for a quadratic subspace `W ⊆ g`, with the tensor product of the
/// PBW and Clifford products (`U(g)` is even).
#[derive(Clone, Debug)]
pub struct MixedAlgebra {
    u: Uenv,
    form: InvariantForm,
    cl: Clifford,
}

impl MixedAlgebra {
    /// `space.embedding()` gives the basis of `W` in the coordinates of `lie`.
    pub fn new(lie: LieAlgebra, form: InvariantForm, space: QuadraticSpace, cap: usize) -> Self {
        MixedAlgebra { u: Uenv::new(lie, cap), form, cl: Clifford::new(space) }
    }

    /// Replaces the Clifford slot, e.g. by a deliberately corrupted product.
    pub fn with_clifford(mut self, cl: Clifford) -> Self {
        self.cl = cl;
        self
    }

    pub fn uenv(&self) -> &Uenv {
        &self.u
    }

    pub fn lie(&self) -> &LieAlgebra {
        self.u.lie()
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    pub fn clifford(&self) -> &Clifford {
        &self.cl
    }

    pub fn cap(&self) -> usize {
        self.u.cap()
    }

    pub fn nu(&self) -> usize {
        self.u.dim()
    }

    pub fn nw(&self) -> usize {
        self.cl.dim()
    }

    pub fn zero(&self) -> Mixed {
        Mixed::zero(self.nu(), self.nw())
    }

    pub fn one(&self) -> Mixed {
        self.from_u(&self.u.one())
    }

    /// `x ⊗ 1`.
    pub fn from_u(&self, x: &Poly) -> Mixed {
        Mixed::tensor(x, &self.cl.one())
    }

    /// `1 ⊗ ω`.
    pub fn from_w(&self, w: &ExteriorElement) -> Mixed {
        Mixed::tensor(&self.u.one(), w)
    }

    /// `u_x` for `x` in `g` coordinates.
    pub fn u_vector(&self, x: &[Scalar]) -> Mixed {
        self.from_u(&self.u.vector(x))
    }

    /// `c_w` for `w` in `W` coordinates.
    pub fn c_vector(&self, w: &[Scalar]) -> Mixed {
        self.from_w(&self.cl.vector(w))
    }

    /// `W` coordinates of a vector of `W` given in `g` coordinates.
    pub fn w_coords(&self, x: &[Scalar]) -> Coords {
        let space = self.cl.space();
        let pairings: Vec<Scalar> = space.embedding().iter().map(|w| self.form.pair(w, x)).collect();
        (0..space.dim()).map(|k| (0..space.dim()).map(|j| &space.gram_inv()[k][j] * &pairings[j]).sum()).collect()
    }

    pub fn mul(&self, x: &Mixed, y: &Mixed) -> Result<Mixed> {
        let mut out = self.zero();
        for (a, p) in x.terms() {
            for (b, q) in y.terms() {
                let pq = self.u.mul(p, q)?;
                if pq.is_zero() {
                    continue;
                }
                let ab = self.cl.odot(
                    &ExteriorElement::monomial(self.nw(), *a, Scalar::one()),
                    &ExteriorElement::monomial(self.nw(), *b, Scalar::one()),
                )?;
                for (m, c) in ab.terms() {
                    out.add_poly(*m, &pq.scale(c));
                }
            }
        }
        Ok(out)
    }

    /// `xy - (-1)^{|x||y|} yx`, extended bilinearly over the parity components.
    pub fn super_commutator(&self, x: &Mixed, y: &Mixed) -> Result<Mixed> {
        let mut out = self.zero();
        for xo in [false, true] {
            let xp = x.parity_part(xo);
            if xp.is_zero() {
                continue;
            }
            for yo in [false, true] {
                let yp = y.parity_part(yo);
                if yp.is_zero() {
                    continue;
                }
                let xy = self.mul(&xp, &yp)?;
                let yx = self.mul(&yp, &xp)?;
                out = out.plus(&if xo && yo { xy.plus(&yx) } else { xy.minus(&yx) });
            }
        }
        Ok(out)
    }

    /// `I ⊗ ī_w` for `w` in `W` coordinates.
    pub fn contract(&self, w: &[Scalar], x: &Mixed) -> Mixed {
        x.map_w(|m| self.cl.contract(w, m))
    }

    /// The adjoint action of `a` (in `g` coordinates) on both factors; `a` must stabilize `W`.
    pub fn lie_derivative(&self, a: &[Scalar], x: &Mixed) -> Mixed {
        let columns: Vec<Coords> = self
            .cl
            .space()
            .embedding()
            .iter()
            .map(|w| {
                let image = self.u.lie().bracket(a, w);
                let coords = self.w_coords(&image);
                debug_assert_eq!(self.cl.space().embed(&coords), image, "[a, W] ⊄ W");
                coords
            })
            .collect();
        let mut out = x.map_u(|p| self.u.adjoint_action(a, p));
        out = out.plus(&x.map_w(|m| self.cl.derivation_from_matrix(&columns, m)));
        out
    }

    /// The subspace of a slice annihilated by `L_a` for every `a` in `acting`.
    pub fn invariants(&self, slice: &MixedSlice, acting: &[Coords]) -> Subspace {
        let ops: Vec<Box<dyn Fn(&Mixed) -> Mixed + '_>> = acting
            .iter()
            .map(|a| Box::new(move |x: &Mixed| self.lie_derivative(a, x)) as Box<dyn Fn(&Mixed) -> Mixed>)
            .collect();
        let refs: Vec<&dyn Fn(&Mixed) -> Mixed> = ops.iter().map(|b| b.as_ref()).collect();
        slice.common_kernel(slice, &refs)
    }

    /// All basis tensors with `U`-degree at most `d`.
    pub fn slice(&self, d: usize) -> MixedSlice {
        MixedSlice::up_to(self.nu(), self.nw(), d)
    }

    pub fn format(&self, x: &Mixed) -> String {
        x.format_with(self.u.labels(), self.cl.labels())
    }
}

/// Masks of all monomials in the given bit positions.
pub fn masks_within(positions: &[usize]) -> Vec<Mask> {
    let k = positions.len();
    (0..1u64 << k)
        .map(|s| positions.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).fold(0u64, |a, (_, &p)| a | 1 << p))
        .collect()
}

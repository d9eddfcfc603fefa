use std::collections::BTreeSet;

use super::pbw::{PbwElement, Slice, Uenv};
use super::poly::{Monomial, Poly};
use crate::error::{Error, Result};
use crate::exactlin::{solve, SparseMatrix, SparseVec, Subspace};
use crate::liealg::{unit, Coords, LieAlgebra};
use crate::scalar::Scalar;

/// A commutative polynomial in `S(g)`, identified with `S(g*)` through the form.
pub type SymElement = Poly;

/// Highest degree handled by [`duflo`].
pub const DUFLO_WINDOW: usize = 3;

fn distinct_permutations(word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut w = word.to_vec();
    permute(&mut w, 0, &mut out);
    out
}

fn permute(w: &mut Vec<usize>, k: usize, out: &mut BTreeSet<Vec<usize>>) {
    if k == w.len() {
        out.insert(w.clone());
        return;
    }
    for i in k..w.len() {
        w.swap(k, i);
        permute(w, k + 1, out);
        w.swap(k, i);
    }
}

/// `a_1 ⋯ a_p ↦ (1/p!) Σ_σ a_{σ(1)} ⋯ a_{σ(p)}`.
pub fn symmetrize(u: &Uenv, s: &SymElement) -> Result<PbwElement> {
    let n = u.dim();
    let mut out = u.zero();
    for (m, c) in s.terms() {
        let perms = distinct_permutations(&m.word());
        let weight = c / &Scalar::from_int(perms.len() as i64);
        for p in perms {
            let vecs: Vec<Coords> = p.iter().map(|&i| unit(n, i)).collect();
            out.add_scaled(&weight, &u.word(&vecs)?);
        }
    }
    Ok(out)
}

/// Coadjoint-equivalent action of `a` on `S(g)`: the derivation extending `ad a`.
pub fn sym_adjoint_action(lie: &LieAlgebra, a: &[Scalar], s: &SymElement) -> SymElement {
    let n = lie.dim();
    let mut out = Poly::zero(n);
    for i in 0..n {
        let d = s.partial(i);
        if d.is_zero() {
            continue;
        }
        let image = Poly::vector(&lie.bracket(a, &unit(n, i)));
        out = out.plus(&d.sym_mul(&image));
    }
    out
}

/// `∂(q)` for `q(x) = tr((ad x)^2)`, i.e. `Σ_ij K_ij ∂_i ∂_j`.
fn trace_operator(lie: &LieAlgebra, s: &SymElement) -> SymElement {
    let k = lie.trace_form();
    let n = lie.dim();
    let mut out = Poly::zero(n);
    for i in 0..n {
        let di = s.partial(i);
        if di.is_zero() {
            continue;
        }
        for j in 0..n {
            if !k[i][j].is_zero() {
                out.add_scaled(&k[i][j], &di.partial(j));
            }
        }
    }
    out
}

/// The Duflo map `Σ ∘ ∂(j^{1/2})` on `S(g)` through degree 3, where only the
/// `tr((ad x)^2)/48` term of `j^{1/2}` contributes.
pub fn duflo(u: &Uenv, s: &SymElement) -> Result<PbwElement> {
    let d = s.degree();
    if d > DUFLO_WINDOW {
        return Err(Error::UnsupportedDegree { degree: d, max: DUFLO_WINDOW });
    }
    let corrected = s.plus(&trace_operator(u.lie(), s).scale(&Scalar::frac(1, 48)));
    symmetrize(u, &corrected)
}

/// Solves `duflo(s) = z` for `s ∈ S(g)` of degree at most `deg z`.
pub fn duflo_inverse(u: &Uenv, z: &PbwElement) -> Result<SymElement> {
    let d = z.degree();
    if d > DUFLO_WINDOW {
        return Err(Error::UnsupportedDegree { degree: d, max: DUFLO_WINDOW });
    }
    let n = u.dim();
    let slice = Slice::new(Monomial::up_to(n, d));
    let cols: Vec<SparseVec> = slice
        .monomials()
        .iter()
        .map(|m| duflo(u, &Poly::monomial(m.clone(), Scalar::one())).map(|x| slice.to_vec(&x)))
        .collect::<Result<_>>()?;
    let mat = SparseMatrix::from_columns(slice.len(), &cols)?;
    let x = solve(&mat, &slice.to_vec(z)).ok_or_else(|| Error::NoSolution("Duflo preimage".into()))?;
    Ok(slice.from_vec(n, &x))
}

/// `Σ_k u_{a_k} u_{b_k}` for dual bases `{a_k}`, `{b_k}`.
pub fn casimir(u: &Uenv, a: &[Coords], b: &[Coords]) -> Result<PbwElement> {
    let mut out = u.zero();
    for (x, y) in a.iter().zip(b) {
        out = out.plus(&u.mul(&u.vector(x), &u.vector(y))?);
    }
    Ok(out)
}

/// The symbol `Σ_k a_k b_k ∈ S^2(g)`.
pub fn casimir_symbol(a: &[Coords], b: &[Coords]) -> SymElement {
    let n = a.first().map_or(0, |v| v.len());
    let mut out = Poly::zero(n);
    for (x, y) in a.iter().zip(b) {
        out = out.plus(&Poly::vector(x).sym_mul(&Poly::vector(y)));
    }
    out
}

/// The degree-`≤d` slice of `S(g)^{a}` for the given acting vectors.
pub fn sym_invariants(lie: &LieAlgebra, acting: &[Coords], d: usize) -> Vec<SymElement> {
    let n = lie.dim();
    let slice = Slice::new(Monomial::up_to(n, d));
    let blocks: Vec<SparseMatrix> = acting
        .iter()
        .map(|a| {
            let cols: Vec<SparseVec> = slice
                .monomials()
                .iter()
                .map(|m| slice.to_vec(&sym_adjoint_action(lie, a, &Poly::monomial(m.clone(), Scalar::one()))))
                .collect();
            SparseMatrix::from_columns(slice.len(), &cols).expect("slice closed")
        })
        .collect();
    if blocks.is_empty() {
        return slice.monomials().iter().map(|m| Poly::monomial(m.clone(), Scalar::one())).collect();
    }
    let stacked = SparseMatrix::vstack(&blocks).expect("same width");
    Subspace::kernel(&stacked).basis().iter().map(|v| slice.from_vec(n, v)).collect()
}

use super::mixed::{Mixed, MixedSlice};
use crate::cliff::{bits, Clifford, ExteriorElement};
use crate::error::Result;
use crate::liealg::{unit, Coords, InvariantForm, LieAlgebra, QuadraticSpace};
use crate::scalar::Scalar;
use crate::uenv::{sym_adjoint_action, Monomial, Poly};

/// The classical Weil algebra `W(g) = S(g*) ⊗ Λ(g*)`, stored as `S(g) ⊗ Λ(g)` through the form.
///
/// `s_j` and `e_j` denote the `j`-th basis vector in the symmetric and exterior slots.
#[derive(Clone, Debug)]
pub struct Weil {
    lie: LieAlgebra,
    cl: Clifford,
    koszul: Vec<ExteriorElement>,
    ds: Vec<Mixed>,
}

impl Weil {
    pub fn new(lie: LieAlgebra, form: &InvariantForm) -> Result<Self> {
        let n = lie.dim();
        let space =
            QuadraticSpace::new(lie.labels().to_vec(), form.gram().to_vec(), (0..n).map(|i| unit(n, i)).collect())?;
        let cl = Clifford::new(space);
        let koszul = cl.koszul_generators(&lie);
        // d s_j = -d(1⊗d_∧e_j) = -Σ_k s_k ⊗ ∂_k(d_∧ e_j), since d_∧² = 0
        let ds = koszul
            .iter()
            .map(|de| {
                let mut out = Mixed::zero(n, n);
                for k in 0..n {
                    out.add_scaled(&Scalar::from_int(-1), &Mixed::tensor(&Poly::generator(n, k), &de.partial(k)));
                }
                out
            })
            .collect();
        Ok(Weil { lie, cl, koszul, ds })
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn clifford(&self) -> &Clifford {
        &self.cl
    }

    pub fn one(&self) -> Mixed {
        Mixed::tensor(&Poly::one(self.dim()), &self.cl.one())
    }

    /// `s_j ⊗ 1`.
    pub fn s(&self, j: usize) -> Mixed {
        Mixed::tensor(&Poly::generator(self.dim(), j), &self.cl.one())
    }

    /// `1 ⊗ e_j`.
    pub fn e(&self, j: usize) -> Mixed {
        Mixed::tensor(&Poly::one(self.dim()), &self.cl.generator(j))
    }

    /// The supercommutative product `(P⊗ω)(Q⊗η) = PQ ⊗ ω∧η`.
    pub fn mul(&self, x: &Mixed, y: &Mixed) -> Mixed {
        let n = self.dim();
        let mut out = Mixed::zero(n, n);
        for (a, p) in x.terms() {
            for (b, q) in y.terms() {
                let w = ExteriorElement::monomial(n, *a, Scalar::one())
                    .wedge(&ExteriorElement::monomial(n, *b, Scalar::one()))
                    .expect("same ambient");
                out = out.plus(&Mixed::tensor(&p.sym_mul(q), &w));
            }
        }
        out
    }

    /// The Weil differential: the odd derivation with `d(1⊗e_j) = s_j⊗1 + 1⊗d_∧e_j`.
    pub fn d(&self, x: &Mixed) -> Mixed {
        let n = self.dim();
        let mut out = Mixed::zero(n, n);
        for (mask, p) in x.terms() {
            let omega = ExteriorElement::monomial(n, *mask, Scalar::one());
            // d(P⊗1)·(1⊗ω)
            let mut dp = Mixed::zero(n, n);
            for j in 0..n {
                let dj = p.partial(j);
                if !dj.is_zero() {
                    dp = dp.plus(&self.mul(&Mixed::tensor(&dj, &self.cl.one()), &self.ds[j]));
                }
            }
            out = out.plus(&self.mul(&dp, &Mixed::tensor(&Poly::one(n), &omega)));
            // (P⊗1)·d(1⊗ω)
            for k in bits(*mask) {
                out = out.plus(&Mixed::tensor(&p.sym_mul(&Poly::generator(n, k)), &omega.partial(k)));
            }
            out = out.plus(&Mixed::tensor(p, &omega.derivation(&self.koszul, true)));
        }
        out
    }

    /// `i_a = I ⊗ i'_a`.
    pub fn i(&self, a: &[Scalar], x: &Mixed) -> Mixed {
        x.map_w(|m| self.cl.contract(a, m))
    }

    /// The coadjoint action, transported to the adjoint action on both slots.
    pub fn l(&self, a: &[Scalar], x: &Mixed) -> Mixed {
        let n = self.dim();
        let columns: Vec<Coords> = (0..n).map(|j| self.lie.bracket(a, &unit(n, j))).collect();
        x.map_u(|p| sym_adjoint_action(&self.lie, a, p)).plus(&x.map_w(|m| self.cl.derivation_from_matrix(&columns, m)))
    }

    /// Basis tensors of `S^{≤d}(g) ⊗ Λ(g)`.
    pub fn slice(&self, d: usize) -> MixedSlice {
        MixedSlice::up_to(self.dim(), self.dim(), d)
    }

    /// The `ℤ`-degree `2k + l` of `S^k ⊗ Λ^l` for homogeneous basis tensors.
    pub fn degree_of(m: &Monomial, mask: u64) -> usize {
        2 * m.degree() + mask.count_ones() as usize
    }

    pub fn format(&self, x: &Mixed) -> String {
        let s: Vec<String> = self.lie.labels().iter().map(|l| format!("s_{l}")).collect();
        let e: Vec<String> = self.lie.labels().iter().map(|l| format!("e_{l}")).collect();
        x.format_with(&s, &e)
    }
}

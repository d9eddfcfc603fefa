use super::mixed::{Mixed, MixedAlgebra};
use crate::cliff::{trilinear_element, Clifford, ExteriorElement};
use crate::error::Result;
use crate::liealg::{unit, Coords, InvariantForm, LieAlgebra, QuadraticSpace};
use crate::scalar::Scalar;

/// Signs of the four terms of the explicit differential
/// `s₁ ad u_{a_k}(x)⊗c_{b_k}∧ω + s₂ ½(u_{a_k}x + xu_{a_k})⊗ī_{b_k}ω + s₃ x⊗d_∧ω + s₄ ¼ x⊗ī_γω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FourTermSigns(pub [i64; 4]);

impl FourTermSigns {
    /// The signs as printed in the usual statement of the formula: `(-, -, +, +)`.
    pub const PRINTED: FourTermSigns = FourTermSigns([-1, -1, 1, 1]);
    /// The signs for which the formula agrees with `ad 𝒟`.
    pub const AD_DIRAC: FourTermSigns = FourTermSigns([1, 1, 1, 1]);
}

/// The noncommutative Weil algebra `𝒲(g) = U(g) ⊗ Cl(g)`.
#[derive(Clone, Debug)]
pub struct NcWeil {
    alg: MixedAlgebra,
    gamma: ExteriorElement,
    dirac: Mixed,
}

impl NcWeil {
    pub fn new(lie: LieAlgebra, form: InvariantForm, cap: usize) -> Result<Self> {
        let n = lie.dim();
        let space =
            QuadraticSpace::new(lie.labels().to_vec(), form.gram().to_vec(), (0..n).map(|i| unit(n, i)).collect())?;
        let gamma = trilinear_element(&space, |x, y, z| form.pair(x, &lie.bracket(y, z)));
        let alg = MixedAlgebra::new(lie, form, space, cap);
        let dirac = dirac_element(&alg, &gamma);
        Ok(NcWeil { alg, gamma, dirac })
    }

    /// Same algebra with `⊙` built from `Exp(c·Σ i¹i²)`; for negative controls only.
    pub fn with_exp_coefficient(mut self, c: Scalar) -> Self {
        let space = self.alg.clifford().space().clone();
        self.alg = self.alg.with_clifford(Clifford::with_exp_coefficient(space, c));
        self
    }

    pub fn algebra(&self) -> &MixedAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.nu()
    }

    pub fn gamma(&self) -> &ExteriorElement {
        &self.gamma
    }

    /// `𝒟 = Σ_k u_{a_k} c_{b_k} - 1⊗γ`.
    pub fn dirac(&self) -> &Mixed {
        &self.dirac
    }

    pub fn u(&self, i: usize) -> Mixed {
        self.alg.u_vector(&unit(self.dim(), i))
    }

    pub fn c(&self, i: usize) -> Mixed {
        self.alg.c_vector(&unit(self.dim(), i))
    }

    /// `d = ad 𝒟`.
    pub fn d(&self, x: &Mixed) -> Result<Mixed> {
        self.alg.super_commutator(&self.dirac, x)
    }

    pub fn i(&self, a: &[Scalar], x: &Mixed) -> Mixed {
        self.alg.contract(a, x)
    }

    pub fn l(&self, a: &[Scalar], x: &Mixed) -> Mixed {
        self.alg.lie_derivative(a, x)
    }

    /// The four-term expression for the differential with the given term signs.
    pub fn explicit_differential(&self, x: &Mixed, signs: FourTermSigns) -> Result<Mixed> {
        let n = self.dim();
        let u = self.alg.uenv();
        let cl = self.alg.clifford();
        let lie = self.alg.lie();
        let dual = cl.space().dual_basis();
        let koszul = cl.koszul_generators(lie);
        let [s1, s2, s3, s4] = signs.0.map(Scalar::from_int);
        let quarter = &s4 * &Scalar::frac(1, 4);
        let half = &s2 * &Scalar::frac(1, 2);
        let mut out = self.alg.zero();
        for (mask, p) in x.terms() {
            let omega = ExteriorElement::monomial(n, *mask, Scalar::one());
            for k in 0..n {
                let a = unit(n, k);
                let b = &dual[k];
                let ad = u.adjoint_action(&a, p);
                let wedge = cl.vector(b).wedge(&omega)?;
                out.add_scaled(&s1, &Mixed::tensor(&ad, &wedge));
                let contracted = cl.contract(b, &omega);
                if !contracted.is_zero() {
                    let ua = u.generator(k);
                    let sym = u.mul(&ua, p)?.plus(&u.mul(p, &ua)?);
                    out.add_scaled(&half, &Mixed::tensor(&sym, &contracted));
                }
            }
            out.add_scaled(&s3, &Mixed::tensor(p, &omega.derivation(&koszul, true)));
            out.add_scaled(&quarter, &Mixed::tensor(p, &cl.contract_multi(&self.gamma, &omega)));
        }
        Ok(out)
    }
}

fn dirac_element(alg: &MixedAlgebra, gamma: &ExteriorElement) -> Mixed {
    let space = alg.clifford().space();
    let mut out = alg.from_w(&gamma.neg());
    for (w, dual) in space.embedding().iter().zip(space.dual_basis()) {
        out = out.plus(&Mixed::tensor(&alg.uenv().vector(w), &alg.clifford().vector(&dual)));
    }
    out
}

/// `Σ_ℓ u_{p_ℓ}⊗c_{q_ℓ} - 1⊗γ_W` for the Clifford slot `W` of `alg`.
pub fn cubic_element(alg: &MixedAlgebra, gamma: &ExteriorElement) -> Mixed {
    dirac_element(alg, gamma)
}

/// Basis vectors of `g` as coordinate vectors.
pub fn basis_vectors(n: usize) -> Vec<Coords> {
    (0..n).map(|i| unit(n, i)).collect()
}

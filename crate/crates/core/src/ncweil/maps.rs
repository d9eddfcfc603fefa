use super::mixed::Mixed;
use super::nc::NcWeil;
use super::weil::Weil;
use crate::cliff::{bilinear_element, ExteriorElement};
use crate::error::Result;
use crate::liealg::{unit, InvariantForm, Part, QuadraticPair};
use crate::scalar::Scalar;
use crate::uenv::Poly;

/// The maps `F: W(r) → W(g)` and `𝓕: 𝒲(r) → 𝒲(g)` of a quadratic pair.
#[derive(Clone, Debug)]
pub struct InductionMaps {
    pair: QuadraticPair,
    weil_r: Weil,
    weil_g: Weil,
    nc_r: NcWeil,
    nc_g: NcWeil,
    /// `ι(e_v)` for the basis of `r`.
    lambda: Vec<ExteriorElement>,
    /// `δ(v)` for the basis of `r`, in `Λ²(g)`.
    delta: Vec<ExteriorElement>,
    /// `α(v)` for the basis of `r`, in `Λ²(g)`.
    alpha: Vec<ExteriorElement>,
}

impl InductionMaps {
    /// `alphas` are the values of `α` on the basis of `r`, in `Λ²(p)` coordinates.
    pub fn new(pair: &QuadraticPair, alphas: &[ExteriorElement], cap: usize) -> Result<Self> {
        let n = pair.g().dim();
        let r_form = InvariantForm::new(pair.space(Part::R).gram().to_vec())?;
        let r = pair.r_algebra().clone();
        let p_images: Vec<ExteriorElement> = pair.basis(Part::P).iter().map(|v| ExteriorElement::vector(v)).collect();
        let lambda = pair.basis(Part::R).iter().map(|v| ExteriorElement::vector(v)).collect();
        let delta = pair
            .basis(Part::R)
            .iter()
            .map(|v| {
                bilinear_element(pair.space(Part::P), |y, z| {
                    let (y, z) = (pair.space(Part::P).embed(y), pair.space(Part::P).embed(z));
                    pair.inner(v, &pair.bracket(&y, &z))
                })
                .substitute(&p_images, n)
            })
            .collect();
        let alpha = alphas.iter().map(|a| a.substitute(&p_images, n)).collect();
        Ok(InductionMaps {
            pair: pair.clone(),
            weil_r: Weil::new(r.clone(), &r_form)?,
            weil_g: Weil::new(pair.g().clone(), pair.form())?,
            nc_r: NcWeil::new(r, r_form, cap)?,
            nc_g: NcWeil::new(pair.g().clone(), pair.form().clone(), cap)?,
            lambda,
            delta,
            alpha,
        })
    }

    pub fn weil_r(&self) -> &Weil {
        &self.weil_r
    }

    pub fn weil_g(&self) -> &Weil {
        &self.weil_g
    }

    pub fn nc_r(&self) -> &NcWeil {
        &self.nc_r
    }

    pub fn nc_g(&self) -> &NcWeil {
        &self.nc_g
    }

    /// `δ(v_j)` for the `j`-th basis vector of `r`.
    pub fn delta(&self, j: usize) -> &ExteriorElement {
        &self.delta[j]
    }

    /// `r` coordinates to `g` coordinates.
    pub fn embed(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.pair.space(Part::R).embed(x)
    }

    fn exterior_image(&self, w: &ExteriorElement) -> ExteriorElement {
        w.substitute(&self.lambda, self.pair.g().dim())
    }

    /// `F(s_v) = s_v − 1⊗δ(v)`, `F(e_v) = e_v`, extended multiplicatively.
    pub fn classical(&self, x: &Mixed) -> Mixed {
        let n = self.pair.g().dim();
        let nr = self.pair.dim(Part::R);
        let gens: Vec<Mixed> = (0..nr)
            .map(|j| {
                let s = Mixed::tensor(&Poly::vector(&self.embed(&unit(nr, j))), &ExteriorElement::one(n));
                s.minus(&Mixed::tensor(&Poly::one(n), &self.delta[j]))
            })
            .collect();
        let w = &self.weil_g;
        let mut out = Mixed::zero(n, n);
        for (mask, p) in x.terms() {
            let tail = Mixed::tensor(
                &Poly::one(n),
                &self.exterior_image(&ExteriorElement::monomial(nr, *mask, Scalar::one())),
            );
            for (m, c) in p.terms() {
                let head = m.word().into_iter().fold(w.one(), |acc, i| w.mul(&acc, &gens[i]));
                out.add_scaled(c, &w.mul(&head, &tail));
            }
        }
        out
    }

    /// `𝓕(x⊗1) = x⊗1 + 1⊗α(x)`, `𝓕(1⊗y) = 1⊗y`, extended multiplicatively over PBW words.
    pub fn quantum(&self, x: &Mixed) -> Result<Mixed> {
        let alg = self.nc_g.algebra();
        let nr = self.pair.dim(Part::R);
        let gens: Vec<Mixed> =
            (0..nr).map(|j| alg.u_vector(&self.embed(&unit(nr, j))).plus(&alg.from_w(&self.alpha[j]))).collect();
        let mut out = alg.zero();
        for (mask, p) in x.terms() {
            let tail = alg.from_w(&self.exterior_image(&ExteriorElement::monomial(nr, *mask, Scalar::one())));
            for (m, c) in p.terms() {
                let mut head = alg.one();
                for i in m.word() {
                    head = alg.mul(&head, &gens[i])?;
                }
                out.add_scaled(c, &alg.mul(&head, &tail)?);
            }
        }
        Ok(out)
    }
}

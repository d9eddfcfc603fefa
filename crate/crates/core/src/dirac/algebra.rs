use crate::cliff::{cartan_element, ExteriorElement, Mask};
use crate::error::{Error, Result};
use crate::exactlin::{solve, SparseMatrix, SparseVec, Subspace};
use crate::liealg::{unit, Coords, Part, QuadraticPair};
use crate::ncweil::{cubic_element, Mixed, MixedAlgebra, MixedSlice};
use crate::scalar::Scalar;
use crate::uenv::{Poly, Uenv};

/// The algebra `U(g) ⊗ Cl(p)` of a quadratic pair with the cubic Dirac element
/// `𝒟^p = Σ_ℓ u_{p_ℓ}⊗c_{q_ℓ} − 1⊗γ_p`, the map `α: r → Cl(p)` and `ξ: U(r) → U(g)⊗Cl(p)`.
#[derive(Clone, Debug)]
pub struct DiracAlgebra {
    pair: QuadraticPair,
    alg: MixedAlgebra,
    gamma: ExteriorElement,
    dirac: Mixed,
    alphas: Vec<ExteriorElement>,
    ur: Uenv,
}

impl DiracAlgebra {
    pub fn new(pair: &QuadraticPair, cap: usize) -> Result<Self> {
        let alg = MixedAlgebra::new(pair.g().clone(), pair.form().clone(), pair.space(Part::P).clone(), cap);
        let gamma = cartan_element(pair, Part::P);
        let dirac = cubic_element(&alg, &gamma);
        let alphas = pair.basis(Part::R).iter().map(|x| solve_alpha(pair, &alg, x)).collect::<Result<_>>()?;
        let ur = Uenv::new(pair.r_algebra().clone(), cap);
        Ok(DiracAlgebra { pair: pair.clone(), alg, gamma, dirac, alphas, ur })
    }

    pub fn pair(&self) -> &QuadraticPair {
        &self.pair
    }

    pub fn algebra(&self) -> &MixedAlgebra {
        &self.alg
    }

    pub fn cap(&self) -> usize {
        self.alg.cap()
    }

    pub fn uenv_r(&self) -> &Uenv {
        &self.ur
    }

    pub fn gamma(&self) -> &ExteriorElement {
        &self.gamma
    }

    /// `𝒟^p`.
    pub fn dirac(&self) -> &Mixed {
        &self.dirac
    }

    /// `α(x)` for `x` in `r` coordinates.
    pub fn alpha(&self, x: &[Scalar]) -> ExteriorElement {
        let mut out = ExteriorElement::zero(self.alg.nw());
        for (c, a) in x.iter().zip(&self.alphas) {
            out.add_scaled(c, a);
        }
        out
    }

    /// `α` on the basis of `r`.
    pub fn alphas(&self) -> &[ExteriorElement] {
        &self.alphas
    }

    /// `ξ(x) = x⊗1 + 1⊗α(x)` for `x` in `r` coordinates.
    pub fn xi_vector(&self, x: &[Scalar]) -> Mixed {
        let g = self.pair.space(Part::R).embed(x);
        self.alg.u_vector(&g).plus(&self.alg.from_w(&self.alpha(x)))
    }

    /// `ξ` extended multiplicatively over PBW words of `U(r)`.
    pub fn xi(&self, u: &Poly) -> Result<Mixed> {
        let nr = self.pair.dim(Part::R);
        let gens: Vec<Mixed> = (0..nr).map(|i| self.xi_vector(&unit(nr, i))).collect();
        let mut out = self.alg.zero();
        for (m, c) in u.terms() {
            let mut acc = self.alg.one();
            for i in m.word() {
                acc = self.alg.mul(&acc, &gens[i])?;
            }
            out.add_scaled(c, &acc);
        }
        Ok(out)
    }

    /// `d = ad 𝒟^p`.
    pub fn d(&self, x: &Mixed) -> Result<Mixed> {
        self.alg.super_commutator(&self.dirac, x)
    }

    /// `L_x` for `x` in `r` coordinates.
    pub fn l(&self, x: &[Scalar]) -> impl Fn(&Mixed) -> Mixed + '_ {
        let g = self.pair.space(Part::R).embed(x);
        move |a: &Mixed| self.alg.lie_derivative(&g, a)
    }

    /// The `r`-invariant part of a slice.
    pub fn invariants(&self, slice: &MixedSlice) -> Subspace {
        self.alg.invariants(slice, self.pair.basis(Part::R))
    }

    /// Basis of the `r`-invariants of `U(g)^{≤d} ⊗ Cl(p)`, restricted to one parity when given.
    pub fn invariant_basis(&self, d: usize, odd: Option<bool>) -> Vec<Mixed> {
        let slice = match odd {
            None => self.alg.slice(d),
            Some(o) => {
                let masks: Vec<Mask> = (0..1u64 << self.alg.nw()).filter(|m| (m.count_ones() % 2 == 1) == o).collect();
                MixedSlice::new(self.alg.nu(), self.alg.nw(), &crate::uenv::Monomial::up_to(self.alg.nu(), d), &masks)
            }
        };
        self.invariants(&slice).basis().iter().map(|v| slice.from_vec(v)).collect()
    }

    /// Basis of `Z(r)^{≤d} = U(r)^r` in degree at most `d`.
    pub fn center_r(&self, d: usize) -> Vec<Poly> {
        let nr = self.pair.dim(Part::R);
        let acting: Vec<Coords> = (0..nr).map(|i| unit(nr, i)).collect();
        self.ur.invariants(&acting, d)
    }

    /// Basis of `Z(g)^{≤d}`.
    pub fn center_g(&self, d: usize) -> Vec<Poly> {
        let n = self.alg.nu();
        let acting: Vec<Coords> = (0..n).map(|i| unit(n, i)).collect();
        self.alg.uenv().invariants(&acting, d)
    }

    pub fn format(&self, x: &Mixed) -> String {
        self.alg.format(x)
    }
}

/// Solves `α(x)⊙c_y − c_y⊙α(x) = c_{[x,y]}` for `α(x) ∈ Λ²(p)`, all `y` in the basis of `p`.
fn solve_alpha(pair: &QuadraticPair, alg: &MixedAlgebra, x: &[Scalar]) -> Result<ExteriorElement> {
    let cl = alg.clifford();
    let m = cl.dim();
    let unknowns: Vec<Mask> = (0..1u64 << m).filter(|s| s.count_ones() == 2).collect();
    let block = 1usize << m;
    let rows = m * block;
    let cols: Vec<SparseVec> = unknowns
        .iter()
        .map(|s| {
            let a = ExteriorElement::monomial(m, *s, Scalar::one());
            let mut pairs = Vec::new();
            for y in 0..m {
                let comm = cl.odot(&a, &cl.generator(y)).and_then(|l| Ok(l.minus(&cl.odot(&cl.generator(y), &a)?)));
                for (mask, c) in comm.expect("same ambient").terms() {
                    pairs.push((y * block + *mask as usize, c.clone()));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let mut rhs = Vec::new();
    for y in 0..m {
        let image = pair.r_action_on_p(x, &unit(m, y));
        for (k, c) in image.iter().enumerate() {
            rhs.push((y * block + (1usize << k), c.clone()));
        }
    }
    let mat = SparseMatrix::from_columns(rows, &cols)?;
    let sol = solve(&mat, &SparseVec::from_pairs(rhs))
        .ok_or_else(|| Error::NoSolution(format!("α({})", crate::scalar::format_coords(x))))?;
    Ok(ExteriorElement::from_terms(m, sol.iter().map(|(i, c)| (unknowns[*i], c.clone()))))
}

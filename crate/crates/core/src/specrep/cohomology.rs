use super::module::GModule;
use super::spinor::SpinorModule;
use crate::dirac::DiracAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{solve, Matrix, SparseMatrix, SparseVec, Subspace};
use crate::liealg::{unit, Part};
use crate::scalar::{Field, Scalar};
use crate::uenv::Poly;

/// `𝒟^p_V` on `V ⊗ S` together with the `ξ`-action of `r`.
///
/// Tensor coordinates are ordered `v_i ⊗ s_j ↦ i·dim S + j`.
#[derive(Clone, Debug)]
pub struct DiracMatrix {
    module: GModule,
    spinors: SpinorModule,
    matrix: Matrix,
    xi: Vec<Matrix>,
    kernel: Subspace,
    image: Subspace,
}

impl DiracMatrix {
    pub fn new(dirac: &DiracAlgebra, module: &GModule, field: Field) -> Result<Self> {
        let pair = dirac.pair();
        let spinors = SpinorModule::new(pair.space(Part::P), field)?;
        DiracMatrix::with_spinors(dirac, module, spinors)
    }

    pub fn with_spinors(dirac: &DiracAlgebra, module: &GModule, spinors: SpinorModule) -> Result<Self> {
        let pair = dirac.pair();
        let (dv, ds) = (module.dim(), spinors.dim());
        let id_v = Matrix::identity(dv);
        let id_s = Matrix::identity(ds);
        let p = pair.space(Part::P);
        let mut matrix = id_v.kron(&spinors.element(dirac.gamma())?).scale(&Scalar::from_int(-1));
        for (w, q) in p.embedding().iter().zip(p.dual_basis()) {
            matrix = &matrix + &module.act(w).kron(&spinors.vector(&q));
        }
        let nr = pair.dim(Part::R);
        let xi = (0..nr)
            .map(|x| {
                let rho = module.act(&pair.basis(Part::R)[x]).kron(&id_s);
                Ok(&rho + &id_v.kron(&spinors.element(&dirac.alpha(&unit(nr, x)))?))
            })
            .collect::<Result<Vec<_>>>()?;
        let sparse = matrix.to_sparse();
        let kernel = Subspace::kernel(&sparse);
        let image = Subspace::image(&sparse);
        Ok(DiracMatrix { module: module.clone(), spinors, matrix, xi, kernel, image })
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn spinors(&self) -> &SpinorModule {
        &self.spinors
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// The `ξ(x)`-matrix `ρ(x)⊗Id + Id⊗σ(α(x))` for the `x`-th basis vector of `r`.
    pub fn xi(&self, x: usize) -> &Matrix {
        &self.xi[x]
    }

    /// `ξ(u)` for `u ∈ U(r)`, products over PBW words.
    pub fn xi_of(&self, u: &Poly) -> Matrix {
        let mut out = Matrix::zero(self.dim(), self.dim());
        for (m, c) in u.terms() {
            let word = m.word().into_iter().fold(Matrix::identity(self.dim()), |acc, i| &acc * &self.xi[i]);
            out = &out + &word.scale(c);
        }
        out
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    /// Whether `𝒟^p_V` commutes with every `ξ(x)`.
    pub fn commutes_with_xi(&self) -> bool {
        self.xi.iter().all(|x| self.matrix.commutator(x).is_zero())
    }

    pub fn cohomology(&self) -> Result<DiracCohomology> {
        let lower = self.kernel.intersect(&self.image)?;
        let basis = lower.quotient_basis(&self.kernel)?;
        let action = self.xi.iter().map(|x| quotient_action(x, &basis, &lower)).collect::<Result<Vec<_>>>()?;
        Ok(DiracCohomology { basis, lower, action })
    }

    /// Acts with `m` on the cohomology representatives.
    pub fn on_cohomology(&self, h: &DiracCohomology, m: &Matrix) -> Result<Matrix> {
        quotient_action(m, &h.basis, &h.lower)
    }
}

/// `Ker 𝒟 / (Ker 𝒟 ∩ Im 𝒟)` with representatives and the induced `r`-action.
#[derive(Clone, Debug)]
pub struct DiracCohomology {
    basis: Vec<SparseVec>,
    lower: Subspace,
    action: Vec<Matrix>,
}

impl DiracCohomology {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        &self.basis
    }

    /// The induced action of the `x`-th basis vector of `r`.
    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }

    /// Rational eigenvalues (with multiplicity) of the action of the `x`-th basis vector, when
    /// its characteristic polynomial splits over `ℚ`.
    pub fn weights(&self, x: usize) -> Option<Vec<Scalar>> {
        rational_roots(&self.action[x].char_poly())
    }
}

fn quotient_action(m: &Matrix, basis: &[SparseVec], lower: &Subspace) -> Result<Matrix> {
    let k = basis.len();
    let ambient = m.nrows();
    let mut cols: Vec<SparseVec> = basis.to_vec();
    cols.extend(lower.basis().iter().cloned());
    let system = SparseMatrix::from_columns(ambient, &cols)?;
    let mut out = Matrix::zero(k, k);
    for (j, b) in basis.iter().enumerate() {
        let image = m.mul_vec(b);
        let sol = solve(&system, &image)
            .ok_or_else(|| Error::NotRepresentation("action does not preserve the kernel".into()))?;
        for (i, c) in sol.iter() {
            if *i < k {
                out.set(*i, j, c.clone());
            }
        }
    }
    Ok(out)
}

/// Outcome of comparing `χ(z)` with the action of `ξ(η_R(z))` on Dirac cohomology.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralCharacterCheck {
    pub chi: Scalar,
    pub cohomology_dim: usize,
    pub holds: bool,
}

/// `ρ(z)` for `z ∈ U(g)`, products over PBW words.
pub fn module_action(module: &GModule, z: &Poly) -> Matrix {
    let d = module.dim();
    let mut out = Matrix::zero(d, d);
    for (m, c) in z.terms() {
        let word = m.word().into_iter().fold(Matrix::identity(d), |acc, i| &acc * module.basis_action(i));
        out = &out + &word.scale(c);
    }
    out
}

/// Checks that `ξ(η)` acts on `H_D` by the scalar through which `z` acts on `V`.
pub fn verify_central_character(dm: &DiracMatrix, z: &Poly, eta: &Poly) -> Result<CentralCharacterCheck> {
    let chi = module_action(dm.module(), z)
        .as_scalar()
        .ok_or_else(|| Error::NoCentralCharacter(format!("z does not act by a scalar on {}", dm.module().name())))?;
    let h = dm.cohomology()?;
    let action = dm.on_cohomology(&h, &dm.xi_of(eta))?;
    let holds = action == Matrix::scalar(h.dim(), &chi);
    Ok(CentralCharacterCheck { chi, cohomology_dim: h.dim(), holds })
}

/// Rational roots of a monic polynomial `c_0 + c_1 t + … + t^n`, if it splits over `ℚ`.
pub fn rational_roots(coeffs: &[Scalar]) -> Option<Vec<Scalar>> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};
    if coeffs.iter().any(|c| !c.is_rational()) {
        return None;
    }
    let denom = coeffs.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.re().denom().clone()));
    let mut poly: Vec<BigInt> = coeffs.iter().map(|c| (c.re() * &denom).to_integer()).collect();
    let mut roots = Vec::new();
    while poly.len() > 1 {
        if poly[0].is_zero() {
            roots.push(Scalar::zero());
            poly.remove(0);
            continue;
        }
        let lead = poly.last().expect("nonempty").abs();
        let constant = poly[0].abs();
        let root = divisors(&constant).into_iter().find_map(|p| {
            divisors(&lead).into_iter().find_map(|q| {
                [p.clone(), -p.clone()].into_iter().find_map(|num| {
                    let r = num_rational::BigRational::new(num, q.clone());
                    evaluates_to_zero(&poly, &r).then_some(r)
                })
            })
        })?;
        poly = deflate(&poly, &root);
        roots.push(Scalar::from_rational(root));
    }
    roots.sort_by(|a, b| a.re().cmp(b.re()));
    Some(roots)
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_traits::ToPrimitive;
    let n = n.to_u64().expect("small characteristic polynomial coefficients");
    (1..=n).filter(|d| n % d == 0).map(num_bigint::BigInt::from).collect()
}

fn evaluates_to_zero(poly: &[num_bigint::BigInt], r: &num_rational::BigRational) -> bool {
    use num_traits::Zero;
    let mut acc = num_rational::BigRational::zero();
    for c in poly.iter().rev() {
        acc = acc * r + num_rational::BigRational::from_integer(c.clone());
    }
    acc.is_zero()
}

/// Divides by `(t − r)` and rescales to integer coefficients.
fn deflate(poly: &[num_bigint::BigInt], r: &num_rational::BigRational) -> Vec<num_bigint::BigInt> {
    use num_traits::{One, Zero};
    let n = poly.len() - 1;
    let mut out = vec![num_rational::BigRational::zero(); n];
    let mut carry = num_rational::BigRational::zero();
    for k in (1..=n).rev() {
        carry = carry * r + num_rational::BigRational::from_integer(poly[k].clone());
        out[k - 1] = carry.clone();
    }
    let denom = out.iter().fold(num_bigint::BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    out.iter().map(|c| (c * num_rational::BigRational::from_integer(denom.clone())).to_integer()).collect()
}

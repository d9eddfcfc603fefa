use super::algebra::DiracAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{solve, SparseMatrix, SparseVec, Subspace};
use crate::liealg::{unit, Part, QuadraticPair};
use crate::ncweil::Mixed;
use crate::uenv::{duflo, duflo_inverse, Poly, SymElement, Uenv};

/// Outcome of the windowed check of `Ker d = ξ(Z(r)) ⊕ Im d` at filtration cap `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelDecomposition {
    pub cap: usize,
    /// Dimension of the `r`-invariant slice `U(g)^{≤N} ⊗ Cl(p)`.
    pub invariant_dim: usize,
    pub kernel_dim: usize,
    /// `dim d(invariants^{≤N+1}) ∩ (≤N)`.
    pub image_dim: usize,
    /// `dim ξ(Z(r)^{≤N})`.
    pub xi_dim: usize,
    pub xi_in_kernel: bool,
    pub image_in_kernel: bool,
    pub xi_meets_image_trivially: bool,
    /// `Ker d ∩ (≤N−1) ⊆ ξ(Z(r)) + Im d`.
    pub window_spanned: bool,
}

impl KernelDecomposition {
    pub fn holds(&self) -> bool {
        self.xi_in_kernel && self.image_in_kernel && self.xi_meets_image_trivially && self.window_spanned
    }
}

/// Runs the decomposition check; the algebra's cap must be at least `n + 2`.
pub fn verify_kernel_decomposition(dirac: &DiracAlgebra, n: usize) -> Result<KernelDecomposition> {
    if dirac.cap() < n + 2 {
        return Err(Error::FiltrationOverflow { degree: n + 2, cap: dirac.cap() });
    }
    let alg = dirac.algebra();
    let ambient = alg.slice(n + 2);
    let to_ambient = |x: &Mixed| ambient.to_vec(x);

    let inv_n = dirac.invariant_basis(n, None);
    let inv_n1 = dirac.invariant_basis(n + 1, None);

    let d_n: Vec<SparseVec> = inv_n.iter().map(|x| dirac.d(x).map(|y| to_ambient(&y))).collect::<Result<_>>()?;
    let d_mat = SparseMatrix::from_columns(ambient.len(), &d_n)?;
    let kernel_coeffs = Subspace::kernel(&d_mat);
    let inv_n_vecs: Vec<SparseVec> = inv_n.iter().map(to_ambient).collect();
    let kernel_vecs: Vec<SparseVec> = kernel_coeffs
        .basis()
        .iter()
        .map(|c| c.iter().fold(SparseVec::new(), |acc, (i, x)| acc.axpy(x, &inv_n_vecs[*i])))
        .collect();
    let kernel = Subspace::from_owned(ambient.len(), kernel_vecs)?;

    let images: Vec<SparseVec> = inv_n1.iter().map(|x| dirac.d(x).map(|y| to_ambient(&y))).collect::<Result<_>>()?;
    let image_full = Subspace::from_owned(ambient.len(), images)?;
    let image = image_full.intersect(&ambient.filtration(n))?;

    let xi_vecs: Vec<SparseVec> =
        dirac.center_r(n).iter().map(|z| dirac.xi(z).map(|y| to_ambient(&y))).collect::<Result<_>>()?;
    let xi = Subspace::from_owned(ambient.len(), xi_vecs)?;

    let window = kernel.intersect(&ambient.filtration(n.saturating_sub(1)))?;
    Ok(KernelDecomposition {
        cap: n,
        invariant_dim: inv_n.len(),
        kernel_dim: kernel.dim(),
        image_dim: image.dim(),
        xi_dim: xi.dim(),
        xi_in_kernel: xi.is_subspace_of(&kernel)?,
        image_in_kernel: image.is_subspace_of(&kernel)?,
        xi_meets_image_trivially: xi.intersect(&image_full)?.is_zero(),
        window_spanned: window.is_subspace_of(&xi.sum(&image)?)?,
    })
}

/// `β_R`: restriction `S(g) → S(r)` through the form, i.e. substitution of the
/// orthogonal projection `g → r`.
pub fn restrict_to_r(pair: &QuadraticPair, s: &SymElement) -> SymElement {
    let n = pair.g().dim();
    let nr = pair.dim(Part::R);
    let images: Vec<Poly> = (0..n).map(|i| Poly::vector(&pair.project(Part::R, &unit(n, i)))).collect();
    s.sym_substitute(&images, nr)
}

/// `η_R(z) = D_r ∘ β_R ∘ D_g^{-1}(z)` for `z` of degree at most the Duflo window.
pub fn eta_duflo(pair: &QuadraticPair, z: &Poly) -> Result<Poly> {
    let cap = z.degree().max(1);
    let ug = Uenv::new(pair.g().clone(), cap);
    let ur = Uenv::new(pair.r_algebra().clone(), cap);
    let s = duflo_inverse(&ug, z)?;
    duflo(&ur, &restrict_to_r(pair, &s))
}

/// A solution of `z⊗1 − ξ(η) = 𝒟^p a + a 𝒟^p` with `η ∈ Z(r)` and odd invariant `a`.
#[derive(Clone, Debug)]
pub struct Homotopy {
    pub eta: Poly,
    pub a: Mixed,
    /// `U`-filtration bound used for the search space of `a`.
    pub search_cap: usize,
    /// Whether `η` is determined by the equation within the search space.
    pub eta_unique: bool,
}

/// Solves for `η` in `Z(r)^{≤deg z}` and `a` in the odd invariants of `U(g)^{≤m} ⊗ Cl(p)` jointly.
pub fn solve_homotopy(dirac: &DiracAlgebra, z: &Poly, m: usize) -> Result<Homotopy> {
    let need = (m + 1).max(z.degree());
    if dirac.cap() < need {
        return Err(Error::FiltrationOverflow { degree: need, cap: dirac.cap() });
    }
    let alg = dirac.algebra();
    let ambient = alg.slice(need);
    let centers = dirac.center_r(z.degree());
    let odd = dirac.invariant_basis(m, Some(true));
    let mut cols = Vec::new();
    for c in &centers {
        cols.push(ambient.to_vec(&dirac.xi(c)?));
    }
    for a in &odd {
        cols.push(ambient.to_vec(&dirac.d(a)?));
    }
    let mat = SparseMatrix::from_columns(ambient.len(), &cols)?;
    let rhs = ambient.to_vec(&alg.from_u(z));
    let sol = solve(&mat, &rhs).ok_or_else(|| Error::NoSolution(format!("homotopy within filtration {m}")))?;
    let k = centers.len();
    let mut eta = Poly::zero(dirac.uenv_r().dim());
    let mut a = alg.zero();
    for (i, c) in sol.iter() {
        if *i < k {
            eta.add_scaled(c, &centers[*i]);
        } else {
            a.add_scaled(c, &odd[*i - k]);
        }
    }
    let kernel = Subspace::kernel(&mat);
    let eta_unique = kernel.basis().iter().all(|v| v.iter().all(|(i, _)| *i >= k));
    Ok(Homotopy { eta, a, search_cap: m, eta_unique })
}

/// `z⊗1 − ξ(η) − (𝒟^p a + a𝒟^p)`; zero exactly when the homotopy identity holds.
pub fn homotopy_residual(dirac: &DiracAlgebra, z: &Poly, h: &Homotopy) -> Result<Mixed> {
    let alg = dirac.algebra();
    Ok(alg.from_u(z).minus(&dirac.xi(&h.eta)?).minus(&dirac.d(&h.a)?))
}

/// Both sides of diagram (D) on `z`: `H_r(η_R(z))` and `β_R(H_g(z))`.
pub fn diagram_sides(pair: &QuadraticPair, z: &Poly, eta: &Poly) -> Result<(SymElement, SymElement)> {
    let cap = z.degree().max(eta.degree()).max(1);
    let ug = Uenv::new(pair.g().clone(), cap);
    let ur = Uenv::new(pair.r_algebra().clone(), cap);
    let left = duflo_inverse(&ur, eta)?;
    let right = restrict_to_r(pair, &duflo_inverse(&ug, z)?);
    Ok((left, right))
}

use crate::cliff::{bits, degree, Clifford, ExteriorElement, Mask};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseMatrix, SparseVec, Subspace};
use crate::liealg::{unit, Coords, InvariantForm, LieAlgebra, QuadraticSpace};
use crate::scalar::Scalar;
use crate::uenv::{sym_adjoint_action, Monomial, Poly, Uenv};

/// A finite-dimensional `g`-differential algebra given by exact matrices.
///
/// Matrices act on coordinate columns: entry `(i, j)` is the `b_i`-coefficient of the image of `b_j`.
/// Contractions are indexed by the basis of `g`.
#[derive(Clone, Debug)]
pub struct BDatum {
    name: String,
    labels: Vec<String>,
    odd: Vec<bool>,
    unit_index: usize,
    mult: Vec<Vec<SparseVec>>,
    d: Option<Matrix>,
    i: Vec<Matrix>,
    l: Option<Vec<Matrix>>,
}

impl BDatum {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        odd: Vec<bool>,
        unit_index: usize,
        mult: Vec<Vec<SparseVec>>,
        d: Option<Matrix>,
        i: Vec<Matrix>,
        l: Option<Vec<Matrix>>,
    ) -> Self {
        BDatum { name: name.into(), labels, odd, unit_index, mult, d, i, l }
    }

    /// `B = ℂ` with every operator zero.
    pub fn trivial(g_dim: usize) -> Self {
        let z = Matrix::zero(1, 1);
        BDatum::new(
            "C",
            vec!["1".into()],
            vec![false],
            0,
            vec![vec![SparseVec::unit(0)]],
            Some(z.clone()),
            vec![z.clone(); g_dim],
            Some(vec![z; g_dim]),
        )
    }

    /// `Λ(g*) ≅ Λ(g)` with the Koszul differential, contractions and the coadjoint action.
    pub fn koszul(lie: &LieAlgebra, form: &InvariantForm) -> Result<Self> {
        let n = lie.dim();
        let space =
            QuadraticSpace::new(lie.labels().to_vec(), form.gram().to_vec(), (0..n).map(|i| unit(n, i)).collect())?;
        let cl = Clifford::new(space);
        let koszul = cl.koszul_generators(lie);
        let d = exterior_operator(n, |m| m.derivation(&koszul, true));
        let i = (0..n).map(|a| exterior_operator(n, |m| cl.contract(&unit(n, a), m))).collect();
        let l = (0..n)
            .map(|a| {
                let cols: Vec<Coords> = (0..n).map(|j| lie.bracket(&unit(n, a), &unit(n, j))).collect();
                exterior_operator(n, |m| cl.derivation_from_matrix(&cols, m))
            })
            .collect();
        Ok(exterior_datum("Λ(g*)", cl.labels(), Some(d), i, Some(l)))
    }

    /// `Λ(W)` for a subspace `W ⊆ g` with `i_a = ī_{π_W a}`; only the product and
    /// contractions are defined.
    pub fn exterior_slot(space: &QuadraticSpace, form: &InvariantForm) -> Self {
        let n = space.dim();
        let g_dim = form.dim();
        let cl = Clifford::new(space.clone());
        let i = (0..g_dim)
            .map(|a| {
                let a = unit(g_dim, a);
                let pairings: Vec<Scalar> = space.embedding().iter().map(|w| form.pair(w, &a)).collect();
                let coords: Coords =
                    (0..n).map(|k| (0..n).map(|j| &space.gram_inv()[k][j] * &pairings[j]).sum()).collect();
                exterior_operator(n, |m| cl.contract(&coords, m))
            })
            .collect();
        exterior_datum("Λ(W)", cl.labels(), None, i, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_odd(&self, j: usize) -> bool {
        self.odd[j]
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn product(&self, s: usize, t: usize) -> &SparseVec {
        &self.mult[s][t]
    }

    pub fn contraction(&self, a: usize) -> &Matrix {
        &self.i[a]
    }

    fn require_differential(&self) -> Result<(&Matrix, &[Matrix])> {
        match (&self.d, &self.l) {
            (Some(d), Some(l)) => Ok((d, l)),
            _ => Err(Error::InvalidDatum(format!("{} carries no differential structure", self.name))),
        }
    }

    /// `i_v` for `v` in `g` coordinates.
    pub fn contraction_by(&self, v: &[Scalar]) -> Matrix {
        let mut out = Matrix::zero(self.dim(), self.dim());
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.i[k].scale(c);
            }
        }
        out
    }

    /// `i_γ = Σ c · i_{v_k} i_{v_j} i_{v_i}` over the terms `c v_i∧v_j∧v_k` of `γ` (`i < j < k`).
    pub fn contraction_by_multivector(&self, gamma: &ExteriorElement) -> Matrix {
        let mut out = Matrix::zero(self.dim(), self.dim());
        for (m, c) in gamma.terms() {
            let mut acc = Matrix::identity(self.dim());
            for i in bits(*m) {
                acc = &self.i[i] * &acc;
            }
            out = &out + &acc.scale(c);
        }
        out
    }

    /// Checks the `ĝ*` relations, `d² = 0`, `i_a i_b + i_b i_a = 0`, and that every operator is a
    /// superderivation of the product.
    pub fn validate(&self, lie: &LieAlgebra) -> Result<()> {
        let (d, l) = self.require_differential()?;
        let n = lie.dim();
        let fail = |what: String| Err(Error::InvalidDatum(format!("{}: {what}", self.name)));
        if !(d * d).is_zero() {
            return fail("d² ≠ 0".into());
        }
        for a in 0..n {
            if self.i[a].anticommutator(d) != l[a] {
                return fail(format!("[i_{0}, d] ≠ L_{0}", lie.label(a)));
            }
            for b in 0..n {
                let ab = lie.bracket(&unit(n, a), &unit(n, b));
                if l[a].commutator(&self.i[b]) != self.contraction_by(&ab) {
                    return fail(format!("[L_{}, i_{}] ≠ i_[a,b]", lie.label(a), lie.label(b)));
                }
                let mut lab = Matrix::zero(self.dim(), self.dim());
                for (k, c) in ab.iter().enumerate() {
                    lab = &lab + &l[k].scale(c);
                }
                if l[a].commutator(&l[b]) != lab {
                    return fail(format!("[L_{}, L_{}] ≠ L_[a,b]", lie.label(a), lie.label(b)));
                }
                if !self.i[a].anticommutator(&self.i[b]).is_zero() {
                    return fail(format!("i_{} and i_{} do not anticommute", lie.label(a), lie.label(b)));
                }
            }
        }
        let mut ops: Vec<(&Matrix, bool)> = vec![(d, true)];
        ops.extend(self.i.iter().map(|m| (m, true)));
        ops.extend(l.iter().map(|m| (m, false)));
        for (op, odd) in ops {
            for s in 0..self.dim() {
                for t in 0..self.dim() {
                    let lhs = apply(op, &self.mult[s][t]);
                    let mut rhs = self.mul_vec(&column(op, s), &SparseVec::unit(t));
                    let sign = if odd && self.odd[s] { Scalar::from_int(-1) } else { Scalar::one() };
                    rhs = rhs.axpy(&sign, &self.mul_vec(&SparseVec::unit(s), &column(op, t)));
                    if lhs != rhs {
                        return fail(format!(
                            "operator is not a derivation on ({}, {})",
                            self.labels[s], self.labels[t]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (s, a) in x.iter() {
            for (t, b) in y.iter() {
                out = out.axpy(&(a * b), &self.mult[*s][*t]);
            }
        }
        out
    }
}

fn exterior_operator(n: usize, f: impl Fn(&ExteriorElement) -> ExteriorElement) -> Matrix {
    let size = 1usize << n;
    let mut m = Matrix::zero(size, size);
    for j in 0..size {
        let image = f(&ExteriorElement::monomial(n, j as Mask, Scalar::one()));
        for (i, c) in image.terms() {
            m.set(*i as usize, j, c.clone());
        }
    }
    m
}

fn exterior_datum(name: &str, labels: &[String], d: Option<Matrix>, i: Vec<Matrix>, l: Option<Vec<Matrix>>) -> BDatum {
    let n = labels.len();
    let size = 1usize << n;
    let names = (0..size as Mask)
        .map(|m| {
            let w: Vec<&str> = bits(m).map(|k| labels[k].as_str()).collect();
            if w.is_empty() {
                "1".to_string()
            } else {
                w.join("∧")
            }
        })
        .collect();
    let odd = (0..size as Mask).map(|m| degree(m) % 2 == 1).collect();
    let mult = (0..size as Mask)
        .map(|a| {
            (0..size as Mask)
                .map(|b| {
                    let w = ExteriorElement::monomial(n, a, Scalar::one())
                        .wedge(&ExteriorElement::monomial(n, b, Scalar::one()))
                        .expect("same ambient");
                    SparseVec::from_pairs(w.terms().iter().map(|(m, c)| (*m as usize, c.clone())))
                })
                .collect()
        })
        .collect();
    BDatum::new(name, names, odd, 0, mult, d, i, l)
}

fn column(m: &Matrix, j: usize) -> SparseVec {
    SparseVec::from_pairs((0..m.nrows()).map(|i| (i, m.get(i, j).clone())))
}

fn apply(m: &Matrix, v: &SparseVec) -> SparseVec {
    m.mul_vec(v)
}

/// An element of `A ⊗ B`, one polynomial per basis vector of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BTensor {
    coeffs: Vec<Poly>,
}

impl BTensor {
    pub fn zero(nu: usize, dim_b: usize) -> Self {
        BTensor { coeffs: vec![Poly::zero(nu); dim_b] }
    }

    /// `p ⊗ b_j`.
    pub fn pure(p: &Poly, j: usize, dim_b: usize) -> Self {
        let mut out = BTensor::zero(p.nvars(), dim_b);
        out.coeffs[j] = p.clone();
        out
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|p| p.is_zero())
    }

    pub fn plus(&self, other: &BTensor) -> BTensor {
        BTensor { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> BTensor {
        BTensor { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// `I ⊗ M`.
    pub fn apply_b(&self, m: &Matrix) -> BTensor {
        let nu = self.coeffs.first().map_or(0, |p| p.nvars());
        let mut out = BTensor::zero(nu, m.nrows());
        for (j, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for i in 0..m.nrows() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    out.coeffs[i].add_scaled(c, p);
                }
            }
        }
        out
    }

    /// `f ⊗ I`.
    pub fn map_a(&self, f: impl Fn(&Poly) -> Poly) -> BTensor {
        BTensor { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

/// Coordinates on `A^{≤d} ⊗ B`.
#[derive(Clone, Debug)]
pub struct BSlice {
    nu: usize,
    dim_b: usize,
    monomials: Vec<Monomial>,
}

impl BSlice {
    pub fn new(nu: usize, dim_b: usize, d: usize) -> Self {
        BSlice { nu, dim_b, monomials: Monomial::up_to(nu, d) }
    }

    pub fn len(&self) -> usize {
        self.monomials.len() * self.dim_b
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn basis_element(&self, i: usize) -> BTensor {
        let (m, j) = (i / self.dim_b, i % self.dim_b);
        BTensor::pure(&Poly::monomial(self.monomials[m].clone(), Scalar::one()), j, self.dim_b)
    }

    pub fn to_vec(&self, x: &BTensor) -> SparseVec {
        let mut pairs = Vec::new();
        for (j, p) in x.coeffs.iter().enumerate() {
            for (m, c) in p.terms() {
                let pos = self.monomials.iter().position(|x| x == m).expect("monomial inside the slice");
                pairs.push((pos * self.dim_b + j, c.clone()));
            }
        }
        SparseVec::from_pairs(pairs)
    }

    pub fn from_vec(&self, v: &SparseVec) -> BTensor {
        let mut out = BTensor::zero(self.nu, self.dim_b);
        for (i, c) in v.iter() {
            let (m, j) = (i / self.dim_b, i % self.dim_b);
            out.coeffs[j].add_term(self.monomials[m].clone(), c.clone());
        }
        out
    }

    pub fn matrix_of(&self, target: &BSlice, f: impl Fn(&BTensor) -> BTensor) -> SparseMatrix {
        let cols: Vec<SparseVec> = (0..self.len()).map(|i| target.to_vec(&f(&self.basis_element(i)))).collect();
        SparseMatrix::from_columns(target.len(), &cols).expect("column lengths")
    }
}

/// The Cartan models `(S(g*)⊗B)^g` and `(U(g)⊗B)^g` of a `g`-differential algebra `B`.
#[derive(Clone, Debug)]
pub struct CartanModel {
    lie: LieAlgebra,
    dual: Vec<Coords>,
    datum: BDatum,
    i_dual: Vec<Matrix>,
    i_gamma: Matrix,
}

impl CartanModel {
    pub fn new(lie: LieAlgebra, form: &InvariantForm, datum: BDatum) -> Result<Self> {
        let n = lie.dim();
        let space =
            QuadraticSpace::new(lie.labels().to_vec(), form.gram().to_vec(), (0..n).map(|i| unit(n, i)).collect())?;
        let dual = space.dual_basis();
        let gamma = crate::cliff::trilinear_element(&space, |x, y, z| form.pair(x, &lie.bracket(y, z)));
        let i_dual = dual.iter().map(|b| datum.contraction_by(b)).collect();
        let i_gamma = datum.contraction_by_multivector(&gamma);
        Ok(CartanModel { lie, dual, datum, i_dual, i_gamma })
    }

    pub fn datum(&self) -> &BDatum {
        &self.datum
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    /// `d_G = I⊗d − Σ_k s_{a*_k} ⊗ i_{a_k}` on `S(g*)⊗B`, with `a*_k ↦ b_k` through the form.
    pub fn commutative_differential(&self, x: &BTensor) -> Result<BTensor> {
        let (d, _) = self.datum.require_differential()?;
        let mut out = x.apply_b(d);
        for (k, b) in self.dual.iter().enumerate() {
            let contracted = x.apply_b(self.datum.contraction(k));
            let s = Poly::vector(b);
            out = out.plus(&contracted.map_a(|p| p.sym_mul(&s)).scale(&Scalar::from_int(-1)));
        }
        Ok(out)
    }

    /// `d_G = I⊗d − ½ Σ_k (u^L_{a_k} + u^R_{a_k}) ⊗ i_{b_k} + ¼ I⊗i_γ` on `U(g)⊗B`.
    pub fn noncommutative_differential(&self, u: &Uenv, x: &BTensor) -> Result<BTensor> {
        let (d, _) = self.datum.require_differential()?;
        let n = self.lie.dim();
        let mut out = x.apply_b(d);
        for k in 0..n {
            let contracted = x.apply_b(&self.i_dual[k]);
            if contracted.is_zero() {
                continue;
            }
            let ua = u.generator(k);
            let mut sym = BTensor::zero(n, self.datum.dim());
            for (j, p) in contracted.coeffs.iter().enumerate() {
                if !p.is_zero() {
                    sym.coeffs[j] = u.mul(&ua, p)?.plus(&u.mul(p, &ua)?);
                }
            }
            out = out.plus(&sym.scale(&Scalar::frac(-1, 2)));
        }
        Ok(out.plus(&x.apply_b(&self.i_gamma).scale(&Scalar::frac(1, 4))))
    }

    /// The product `(x⊗b₁)⊙(y⊗b₂) = xy ⊗ μ(Exp(−½ Σ_k i¹_{a_k} i²_{b_k})(b₁⊗b₂))` on `U(g)⊗B`.
    pub fn odot(&self, u: &Uenv, x: &BTensor, y: &BTensor) -> Result<BTensor> {
        let m = self.datum.dim();
        let mut out = BTensor::zero(u.dim(), m);
        for (s, p) in x.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (t, q) in y.coeffs.iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let pq = u.mul(p, q)?;
                for (r, c) in self.b_product(s, t)?.iter() {
                    out.coeffs[*r].add_scaled(c, &pq);
                }
            }
        }
        Ok(out)
    }

    /// `μ(Exp(−½ Σ_k i¹_{a_k} i²_{b_k})(b_s ⊗ b_t))`, with `i²_b(x⊗y) = (−1)^{|x|} x⊗i_b y`.
    pub fn b_product(&self, s: usize, t: usize) -> Result<SparseVec> {
        let m = self.datum.dim();
        let mut cur: Vec<(usize, usize, Scalar)> = vec![(s, t, Scalar::one())];
        let mut total = SparseVec::new();
        let mut step = 0i64;
        while !cur.is_empty() {
            for (x, y, c) in &cur {
                total = total.axpy(c, self.datum.product(*x, *y));
            }
            step += 1;
            if step as usize > 2 * m + 1 {
                return Err(Error::InvalidDatum(format!("{}: contractions are not nilpotent", self.datum.name())));
            }
            let mut next: std::collections::BTreeMap<(usize, usize), Scalar> = std::collections::BTreeMap::new();
            for (x, y, c) in &cur {
                let sign = if self.datum.is_odd(*x) { Scalar::from_int(-1) } else { Scalar::one() };
                for k in 0..self.lie.dim() {
                    let ia = self.datum.contraction(k);
                    let ib = &self.i_dual[k];
                    for x2 in 0..m {
                        let cx = ia.get(x2, *x);
                        if cx.is_zero() {
                            continue;
                        }
                        for y2 in 0..m {
                            let cy = ib.get(y2, *y);
                            if cy.is_zero() {
                                continue;
                            }
                            let coef = &(&(c * cx) * cy) * &(&sign * &Scalar::frac(-1, 2 * step));
                            *next.entry((x2, y2)).or_insert_with(Scalar::zero) += &coef;
                        }
                    }
                }
            }
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).map(|((x, y), c)| (x, y, c)).collect();
        }
        Ok(total)
    }

    /// `L_a` on `A⊗B`; `commutative` selects `S(g)` or `U(g)` for the first factor.
    pub fn lie_derivative(&self, u: &Uenv, a: &[Scalar], x: &BTensor, commutative: bool) -> Result<BTensor> {
        let (_, l) = self.datum.require_differential()?;
        let mut lb = Matrix::zero(self.datum.dim(), self.datum.dim());
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                lb = &lb + &l[k].scale(c);
            }
        }
        let first = x.map_a(|p| if commutative { sym_adjoint_action(&self.lie, a, p) } else { u.adjoint_action(a, p) });
        Ok(first.plus(&x.apply_b(&lb)))
    }

    /// The `g`-invariant subspace of `A^{≤d} ⊗ B`.
    pub fn invariants(&self, u: &Uenv, slice: &BSlice, commutative: bool) -> Result<Subspace> {
        let n = self.lie.dim();
        let mut blocks = Vec::new();
        for a in 0..n {
            let a = unit(n, a);
            let mut cols = Vec::new();
            for i in 0..slice.len() {
                cols.push(slice.to_vec(&self.lie_derivative(u, &a, &slice.basis_element(i), commutative)?));
            }
            blocks.push(SparseMatrix::from_columns(slice.len(), &cols)?);
        }
        if blocks.is_empty() {
            return Ok(Subspace::full(slice.len()));
        }
        Ok(Subspace::kernel(&SparseMatrix::vstack(&blocks)?))
    }
}

use std::collections::BTreeMap;

use crate::cliff::{bits, Clifford, ExteriorElement, Mask};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liealg::{Coords, QuadraticSpace};
use crate::scalar::{Field, Scalar};

/// A spinor module for `Cl(V)`: matrices `σ(c_k)` with `σ(c_x)σ(c_y) + σ(c_y)σ(c_x) = ⟨x,y⟩·Id`.
///
/// Built on the fermionic Fock space of a maximal isotropic subspace; for odd `dim V` the
/// leftover anisotropic line acts by a multiple of the parity operator.
#[derive(Clone, Debug)]
pub struct SpinorModule {
    cl: Clifford,
    field: Field,
    generators: Vec<Matrix>,
}

/// `V = ⊕ span(u_i, v_i) ⊕ (w)` with `⟨u_i, v_j⟩ = δ_ij`, `u`, `v` isotropic.
struct WittBasis {
    hyperbolic: Vec<(Coords, Coords)>,
    line: Option<(Coords, Scalar)>,
}

impl SpinorModule {
    pub fn new(space: &QuadraticSpace, field: Field) -> Result<Self> {
        SpinorModule::with_line_sign(space, field, false)
    }

    /// For odd `dim V`, `negate` selects the other of the two simple modules.
    pub fn with_line_sign(space: &QuadraticSpace, field: Field, negate: bool) -> Result<Self> {
        if let Some(bad) = space.gram().iter().flatten().find(|c| !field.admits(c)) {
            return Err(Error::FieldExtensionRequired(format!(
                "form entry {} lies outside {field}",
                bad.to_exact_string()
            )));
        }
        let witt = witt_basis(space, field)?;
        let k = witt.hyperbolic.len();
        let size = 1usize << k;
        let create = |i: usize| fock_operator(size, |m| (m >> i & 1 == 0).then(|| (m | 1 << i, sign_before(m, i))));
        let annihilate =
            |i: usize| fock_operator(size, |m| (m >> i & 1 == 1).then(|| (m & !(1 << i), sign_before(m, i))));
        let parity = fock_operator(size, |m| Some((m, bits(m as Mask).count() % 2 == 1)));
        let line = match &witt.line {
            None => None,
            Some((w, q)) => {
                let half = q / &Scalar::from_int(2);
                let lambda = half.sqrt_in(field).ok_or_else(|| {
                    Error::FieldExtensionRequired(format!("√({}) is not in {field}", half.to_exact_string()))
                })?;
                let lambda = if negate { -lambda } else { lambda };
                Some((w.clone(), q.clone(), parity.scale(&lambda)))
            }
        };
        let n = space.dim();
        let generators = (0..n)
            .map(|b| {
                let e = crate::liealg::unit(n, b);
                let mut m = Matrix::zero(size, size);
                for (i, (u, v)) in witt.hyperbolic.iter().enumerate() {
                    let cu = space.inner(&e, v);
                    let cv = space.inner(&e, u);
                    if !cu.is_zero() {
                        m = &m + &create(i).scale(&cu);
                    }
                    if !cv.is_zero() {
                        m = &m + &annihilate(i).scale(&cv);
                    }
                }
                if let Some((w, q, sigma_w)) = &line {
                    let c = space.inner(&e, w) / q.clone();
                    if !c.is_zero() {
                        m = &m + &sigma_w.scale(&c);
                    }
                }
                m
            })
            .collect();
        Ok(SpinorModule { cl: Clifford::new(space.clone()), field, generators })
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, |m| m.nrows())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn clifford(&self) -> &Clifford {
        &self.cl
    }

    /// `σ(c_k)` for the `k`-th basis vector.
    pub fn generator(&self, k: usize) -> &Matrix {
        &self.generators[k]
    }

    /// `σ(c_x)` for `x` in coordinates.
    pub fn vector(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (c, g) in x.iter().zip(&self.generators) {
            if !c.is_zero() {
                m = &m + &g.scale(c);
            }
        }
        m
    }

    /// `σ(q(ω))` for an element of `Λ(V)` under the quantization map.
    pub fn element(&self, w: &ExteriorElement) -> Result<Matrix> {
        let mut memo = BTreeMap::new();
        let mut out = Matrix::zero(self.dim(), self.dim());
        for (m, c) in w.terms() {
            out = &out + &self.monomial(*m, &mut memo)?.scale(c);
        }
        Ok(out)
    }

    // v_i ∧ ω = c_i ⊙ ω − (c_i ⊙ ω − v_i ∧ ω), the correction having lower degree.
    fn monomial(&self, m: Mask, memo: &mut BTreeMap<Mask, Matrix>) -> Result<Matrix> {
        if let Some(x) = memo.get(&m) {
            return Ok(x.clone());
        }
        let out = if m == 0 {
            Matrix::identity(self.dim())
        } else {
            let i = m.trailing_zeros() as usize;
            let rest = m & !(1 << i);
            let n = self.cl.dim();
            let tail = ExteriorElement::monomial(n, rest, Scalar::one());
            let head = self.cl.generator(i);
            let correction = self.cl.odot(&head, &tail)?.minus(&head.wedge(&tail)?);
            let mut acc = &self.generators[i] * &self.monomial(rest, memo)?;
            for (mm, c) in correction.terms() {
                acc = &acc - &self.monomial(*mm, memo)?.scale(c);
            }
            acc
        };
        memo.insert(m, out.clone());
        Ok(out)
    }

    /// Checks the Clifford relations on all basis pairs.
    pub fn check_relations(&self) -> bool {
        let n = self.generators.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.generators[i].anticommutator(&self.generators[j]);
                lhs == Matrix::scalar(self.dim(), &self.cl.space().gram()[i][j])
            })
        })
    }
}

fn sign_before(m: usize, i: usize) -> bool {
    (m & ((1 << i) - 1)).count_ones() % 2 == 1
}

fn fock_operator(size: usize, f: impl Fn(usize) -> Option<(usize, bool)>) -> Matrix {
    let mut m = Matrix::zero(size, size);
    for j in 0..size {
        if let Some((i, neg)) = f(j) {
            m.set(i, j, if neg { Scalar::from_int(-1) } else { Scalar::one() });
        }
    }
    m
}

fn axpy(y: &[Scalar], c: &Scalar, x: &[Scalar]) -> Coords {
    y.iter().zip(x).map(|(a, b)| a + &(c * b)).collect()
}

fn scaled(c: &Scalar, x: &[Scalar]) -> Coords {
    x.iter().map(|a| c * a).collect()
}

/// Small integer combinations tried when looking for an isotropic vector.
const SEARCH_RANGE: i64 = 2;

fn witt_basis(space: &QuadraticSpace, field: Field) -> Result<WittBasis> {
    let n = space.dim();
    let mut rest: Vec<Coords> = (0..n).map(|i| crate::liealg::unit(n, i)).collect();
    let mut hyperbolic = Vec::new();
    while rest.len() >= 2 {
        let Some(u) = isotropic_vector(space, &rest, field) else { break };
        let Some(y) = rest.iter().find(|y| !space.inner(&u, y).is_zero()) else {
            return Err(Error::DegenerateForm);
        };
        let y = scaled(&space.inner(&u, y).inv().expect("nonzero"), y);
        let half = &space.inner(&y, &y) / &Scalar::from_int(2);
        let v = axpy(&y, &-half, &u);
        rest = complement(space, &rest, &u, &v);
        hyperbolic.push((u, v));
    }
    let line = match rest.len() {
        0 => None,
        1 => {
            let w = rest.pop().expect("one vector");
            let q = space.inner(&w, &w);
            Some((w, q))
        }
        _ => {
            return Err(Error::FieldExtensionRequired(format!(
                "no isotropic vector found over {field} in a {}-dimensional anisotropic block",
                rest.len()
            )))
        }
    };
    Ok(WittBasis { hyperbolic, line })
}

/// Projects `rest` onto the orthogonal complement of the hyperbolic pair `(u, v)` and drops
/// the resulting dependency.
fn complement(space: &QuadraticSpace, rest: &[Coords], u: &[Scalar], v: &[Scalar]) -> Vec<Coords> {
    let projected: Vec<Coords> = rest
        .iter()
        .map(|x| {
            let a = space.inner(x, v);
            let b = space.inner(x, u);
            axpy(&axpy(x, &-a, u), &-b, v)
        })
        .collect();
    independent(&projected, rest.len() - 2)
}

fn independent(vectors: &[Coords], want: usize) -> Vec<Coords> {
    let mut chosen: Vec<Coords> = Vec::new();
    for v in vectors {
        let mut cand = chosen.clone();
        cand.push(v.clone());
        if rank(&cand) == cand.len() {
            chosen = cand;
        }
        if chosen.len() == want {
            break;
        }
    }
    chosen
}

fn rank(vectors: &[Coords]) -> usize {
    let cols: Vec<crate::exactlin::SparseVec> =
        vectors.iter().map(|v| crate::exactlin::SparseVec::from_pairs(v.iter().cloned().enumerate())).collect();
    let len = vectors.first().map_or(0, |v| v.len());
    crate::exactlin::Subspace::span(len, &cols).map_or(0, |s| s.dim())
}

/// An isotropic vector in `span(rest)`: a basis vector, a pair from an orthogonal basis whose
/// ratio has a square root in `field`, or a small integer combination of that basis.
fn isotropic_vector(space: &QuadraticSpace, rest: &[Coords], field: Field) -> Option<Coords> {
    if let Some(v) = rest.iter().find(|v| space.inner(v, v).is_zero()) {
        return Some(v.clone());
    }
    let orth = orthogonalize(space, rest)?;
    let norms: Vec<Scalar> = orth.iter().map(|w| space.inner(w, w)).collect();
    for i in 0..orth.len() {
        for j in i + 1..orth.len() {
            let ratio = -(&norms[i] / &norms[j]);
            if let Some(t) = ratio.sqrt_in(field) {
                return Some(axpy(&orth[i], &t, &orth[j]));
            }
        }
    }
    let k = orth.len();
    let width = (2 * SEARCH_RANGE + 1) as usize;
    for code in 1..width.pow(k as u32) {
        let coeffs: Vec<i64> = (0..k).map(|i| (code / width.pow(i as u32) % width) as i64 - SEARCH_RANGE).collect();
        let mut v = vec![Scalar::zero(); space.dim()];
        for (c, w) in coeffs.iter().zip(&orth) {
            v = axpy(&v, &Scalar::from_int(*c), w);
        }
        if v.iter().any(|c| !c.is_zero()) && space.inner(&v, &v).is_zero() {
            return Some(v);
        }
    }
    None
}

/// Gram–Schmidt without normalization; `None` if the restricted form is degenerate.
fn orthogonalize(space: &QuadraticSpace, vectors: &[Coords]) -> Option<Vec<Coords>> {
    let mut work: Vec<Coords> = vectors.to_vec();
    let mut out: Vec<Coords> = Vec::new();
    while !work.is_empty() {
        let pos = work.iter().position(|v| !space.inner(v, v).is_zero()).or_else(|| {
            // all remaining vectors isotropic: replace one by a sum with a non-orthogonal partner
            let (i, j) = (0..work.len())
                .flat_map(|i| (i + 1..work.len()).map(move |j| (i, j)))
                .find(|&(i, j)| !space.inner(&work[i], &work[j]).is_zero())?;
            work[i] = axpy(&work[i], &Scalar::one(), &work[j]);
            Some(i)
        })?;
        let w = work.remove(pos);
        let q = space.inner(&w, &w);
        work = work.iter().map(|x| axpy(x, &-(&space.inner(x, &w) / &q), &w)).collect();
        out.push(w);
    }
    Some(out)
}

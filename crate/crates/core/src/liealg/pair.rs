use super::algebra::{axpy, is_zero, unit, Coords, LieAlgebra};
use super::form::InvariantForm;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, SparseMatrix, Subspace};
use crate::scalar::Scalar;

/// A vector space with a nondegenerate symmetric form, optionally embedded in `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSpace {
    labels: Vec<String>,
    gram: Vec<Vec<Scalar>>,
    gram_inv: Vec<Vec<Scalar>>,
    embedding: Vec<Coords>,
}

impl QuadraticSpace {
    /// `embedding[k]` are the coordinates of the k-th basis vector in the ambient basis.
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Scalar>>, embedding: Vec<Coords>) -> Result<Self> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: gram.len() });
        }
        let gram_inv = if n == 0 {
            Vec::new()
        } else {
            Matrix::from_rows(gram.clone()).inverse().ok_or(Error::DegenerateForm)?.to_rows()
        };
        Ok(QuadraticSpace { labels, gram, gram_inv, embedding })
    }

    /// A standalone space with the given Gram matrix.
    pub fn from_gram(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = gram.len();
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        let emb = (0..n).map(|i| unit(n, i)).collect();
        QuadraticSpace::new(labels, gram, emb)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn gram_inv(&self) -> &[Vec<Scalar>] {
        &self.gram_inv
    }

    pub fn embedding(&self) -> &[Coords] {
        &self.embedding
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() && !self.gram[i][j].is_zero() {
                    acc += &(&(a * b) * &self.gram[i][j]);
                }
            }
        }
        acc
    }

    /// The dual basis `{w^k}` with `<w_i, w^k> = δ_ik`, in this space's coordinates.
    pub fn dual_basis(&self) -> Vec<Coords> {
        let n = self.dim();
        (0..n).map(|k| (0..n).map(|j| self.gram_inv[j][k].clone()).collect()).collect()
    }

    /// Coordinates in the ambient basis.
    pub fn embed(&self, x: &[Scalar]) -> Coords {
        let m = self.embedding.first().map_or(0, |v| v.len());
        let mut out = vec![Scalar::zero(); m];
        for (c, v) in x.iter().zip(&self.embedding) {
            axpy(&mut out, c, v);
        }
        out
    }
}

/// Which part of `g = r ⊕ p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    G,
    R,
    P,
}

/// A validated quadratic pair `(g, r)` with `p = r^⊥`.
#[derive(Clone, Debug)]
pub struct QuadraticPair {
    g: LieAlgebra,
    form: InvariantForm,
    r_indices: Vec<usize>,
    r_algebra: LieAlgebra,
    g_space: QuadraticSpace,
    r_space: QuadraticSpace,
    p_space: QuadraticSpace,
}

impl QuadraticPair {
    pub fn new(g: LieAlgebra, form: InvariantForm, r_indices: Vec<usize>) -> Result<Self> {
        let n = g.dim();
        g.check_antisymmetry()?;
        g.check_jacobi()?;
        if form.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: form.dim() });
        }
        form.check_symmetric(&g)?;
        form.check_nondegenerate()?;
        form.check_invariant(&g)?;
        if let Some(&bad) = r_indices.iter().find(|&&i| i >= n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad + 1 });
        }
        let mut sorted = r_indices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != r_indices.len() {
            return Err(Error::Schema("subalgebra indices repeat".into()));
        }
        for &i in &r_indices {
            for &j in &r_indices {
                if g.bracket_basis(i, j).iter().any(|(k, _)| !r_indices.contains(k)) {
                    return Err(Error::NotSubalgebra(g.label(i).into(), g.label(j).into()));
                }
            }
        }
        let r_basis: Vec<Coords> = r_indices.iter().map(|&i| unit(n, i)).collect();
        let r_gram = form.restrict(&r_basis);
        let r_labels: Vec<String> = r_indices.iter().map(|&i| g.label(i).to_string()).collect();
        let r_space =
            QuadraticSpace::new(r_labels.clone(), r_gram, r_basis.clone()).map_err(|_| Error::DegenerateRestriction)?;

        let constraints =
            SparseMatrix::from_dense(&r_indices.iter().map(|&i| form.gram()[i].clone()).collect::<Vec<_>>());
        let p_basis: Vec<Coords> = if r_indices.is_empty() {
            (0..n).map(|i| unit(n, i)).collect()
        } else {
            Subspace::kernel(&SparseMatrix::from_rows(n, constraints.rows().to_vec())?)
                .basis()
                .iter()
                .map(|v| v.to_dense(n))
                .collect()
        };
        let p_labels: Vec<String> = p_basis
            .iter()
            .enumerate()
            .map(|(l, v)| match unit_index(v) {
                Some(i) => g.label(i).to_string(),
                None => format!("p{}", l + 1),
            })
            .collect();
        let p_gram = form.restrict(&p_basis);
        let p_space = QuadraticSpace::new(p_labels, p_gram, p_basis.clone())?;

        for &i in &r_indices {
            for (l, y) in p_basis.iter().enumerate() {
                let z = g.bracket(&unit(n, i), y);
                if r_basis.iter().any(|r| !form.pair(r, &z).is_zero()) {
                    return Err(Error::NotStable(g.label(i).into(), p_space.labels()[l].clone()));
                }
            }
        }

        let k = r_indices.len();
        let mut rc = vec![vec![vec![Scalar::zero(); k]; k]; k];
        for (a, &i) in r_indices.iter().enumerate() {
            for (b, &j) in r_indices.iter().enumerate() {
                for (t, c) in g.bracket_basis(i, j) {
                    let pos = r_indices.iter().position(|x| x == t).expect("closed");
                    rc[a][b][pos] = c.clone();
                }
            }
        }
        let r_algebra = LieAlgebra::new_unchecked(r_labels, rc)?;
        let g_space =
            QuadraticSpace::new(g.labels().to_vec(), form.gram().to_vec(), (0..n).map(|i| unit(n, i)).collect())?;
        Ok(QuadraticPair { g, form, r_indices, r_algebra, g_space, r_space, p_space })
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    pub fn r_indices(&self) -> &[usize] {
        &self.r_indices
    }

    /// `r` as a Lie algebra in its own basis.
    pub fn r_algebra(&self) -> &LieAlgebra {
        &self.r_algebra
    }

    pub fn space(&self, part: Part) -> &QuadraticSpace {
        match part {
            Part::G => &self.g_space,
            Part::R => &self.r_space,
            Part::P => &self.p_space,
        }
    }

    pub fn dim(&self, part: Part) -> usize {
        self.space(part).dim()
    }

    /// Basis of the part, in `g` coordinates.
    pub fn basis(&self, part: Part) -> &[Coords] {
        self.space(part).embedding()
    }

    /// Dual basis of the part with respect to the form, in `g` coordinates.
    pub fn dual_basis(&self, part: Part) -> Vec<Coords> {
        let s = self.space(part);
        s.dual_basis().iter().map(|d| s.embed(d)).collect()
    }

    /// Coordinates of the orthogonal projection of `x` (in `g` coordinates) onto the part.
    pub fn project(&self, part: Part, x: &[Scalar]) -> Coords {
        self.dual_basis(part).iter().map(|b| self.form.pair(x, b)).collect()
    }

    pub fn inner(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.form.pair(x, y)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Coords {
        self.g.bracket(x, y)
    }

    /// `[x, y]` for `x ∈ r`, `y ∈ p`, in `p` coordinates.
    pub fn r_action_on_p(&self, x: &[Scalar], y_p: &[Scalar]) -> Coords {
        let y = self.p_space.embed(y_p);
        self.project(Part::P, &self.g.bracket(x, &y))
    }

    pub fn is_symmetric(&self) -> bool {
        let p = self.basis(Part::P);
        p.iter().all(|x| p.iter().all(|y| is_zero(&self.project(Part::P, &self.g.bracket(x, y)))))
    }
}

fn unit_index(v: &[Scalar]) -> Option<usize> {
    let nz: Vec<usize> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect();
    (nz.len() == 1 && v[nz[0]].is_one()).then(|| nz[0])
}

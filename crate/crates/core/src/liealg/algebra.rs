use crate::error::{Error, Result};
use crate::exactlin::SparseMatrix;
use crate::scalar::Scalar;

/// A vector in coordinates of some fixed basis.
pub type Coords = Vec<Scalar>;

pub fn unit(n: usize, i: usize) -> Coords {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn axpy(acc: &mut Coords, c: &Scalar, x: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

pub fn is_zero(x: &[Scalar]) -> bool {
    x.iter().all(|c| c.is_zero())
}

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    // brackets[i][j] = sparse coordinates of [x_i, x_j]
    brackets: Vec<Vec<Vec<(usize, Scalar)>>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new(labels: Vec<String>, constants: Vec<Vec<Coords>>) -> Result<Self> {
        let g = LieAlgebra::new_unchecked(labels, constants)?;
        g.check_antisymmetry()?;
        g.check_jacobi()?;
        Ok(g)
    }

    /// Only shape checks; used by validators that report individual failures.
    pub fn new_unchecked(labels: Vec<String>, constants: Vec<Vec<Coords>>) -> Result<Self> {
        let n = labels.len();
        if constants.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: constants.len() });
        }
        let mut brackets = Vec::with_capacity(n);
        for row in constants {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            let mut out = Vec::with_capacity(n);
            for v in row {
                if v.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, found: v.len() });
                }
                out.push(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
            brackets.push(out);
        }
        Ok(LieAlgebra { labels, brackets })
    }

    /// Builds from the nonzero brackets `[x_i, x_j]` with `i < j`; the rest follows by antisymmetry.
    pub fn from_brackets(labels: &[&str], entries: &[(usize, usize, Vec<(usize, Scalar)>)]) -> Result<Self> {
        let n = labels.len();
        let mut c = vec![vec![vec![Scalar::zero(); n]; n]; n];
        for (i, j, v) in entries {
            for (k, x) in v {
                c[*i][*j][*k] = x.clone();
                c[*j][*i][*k] = -x;
            }
        }
        LieAlgebra::new(labels.iter().map(|s| s.to_string()).collect(), c)
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        LieAlgebra { labels, brackets: vec![vec![Vec::new(); n]; n] }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().all(|r| r.iter().all(|v| v.is_empty()))
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.brackets[i][j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.brackets[i][j].iter().find(|(l, _)| *l == k).map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Coords {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` holds `[x, x_j]`.
    pub fn adjoint_matrix(&self, x: &[Scalar]) -> SparseMatrix {
        let n = self.dim();
        let cols: Vec<_> =
            (0..n).map(|j| crate::exactlin::SparseVec::from_dense(&self.bracket(x, &unit(n, j)))).collect();
        SparseMatrix::from_columns(n, &cols).expect("square")
    }

    /// `K[i][j] = tr(ad x_i ∘ ad x_j)`.
    pub fn trace_form(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let ads: Vec<SparseMatrix> = (0..n).map(|i| self.adjoint_matrix(&unit(n, i))).collect();
        let mut k = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = ads[i].mul(&ads[j]).expect("square");
                k[i][j] = (0..n).map(|t| p.get(t, t)).sum();
            }
        }
        k
    }

    pub fn check_antisymmetry(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let a = self.bracket(&unit(n, i), &unit(n, j));
                let b = self.bracket(&unit(n, j), &unit(n, i));
                if a.iter().zip(&b).any(|(x, y)| !(x + y).is_zero()) {
                    return Err(Error::NotAntisymmetric(self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        Ok(())
    }

    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                    let mut s = self.bracket(&x, &self.bracket(&y, &z));
                    let t = self.bracket(&y, &self.bracket(&z, &x));
                    let u = self.bracket(&z, &self.bracket(&x, &y));
                    axpy(&mut s, &Scalar::one(), &t);
                    axpy(&mut s, &Scalar::one(), &u);
                    if !is_zero(&s) {
                        return Err(Error::JacobiViolation(
                            self.labels[i].clone(),
                            self.labels[j].clone(),
                            self.labels[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Direct sum with `other`; labels of the second summand get `suffix`.
    pub fn direct_sum(&self, other: &LieAlgebra, suffix: &str) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}{suffix}")));
        let mut brackets = vec![vec![Vec::new(); n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                brackets[i][j] = self.brackets[i][j].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                brackets[n + i][n + j] = other.brackets[i][j].iter().map(|(k, c)| (n + k, c.clone())).collect();
            }
        }
        LieAlgebra { labels, brackets }
    }
}

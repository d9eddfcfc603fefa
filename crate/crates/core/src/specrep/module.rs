use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::liealg::{unit, LieAlgebra};
use crate::scalar::Scalar;

/// A finite-dimensional representation, one action matrix per basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct GModule {
    name: String,
    dim: usize,
    action: Vec<Matrix>,
}

impl GModule {
    /// Checks `ρ([x,y]) = [ρ(x), ρ(y)]` on all basis pairs.
    pub fn new(name: impl Into<String>, g: &LieAlgebra, action: Vec<Matrix>) -> Result<Self> {
        let name = name.into();
        if action.len() != g.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: action.len() });
        }
        let dim = action.first().map_or(1, |m| m.nrows());
        if action.iter().any(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::NotRepresentation(format!("{name}: action matrices differ in size")));
        }
        let m = GModule { name, dim, action };
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = m.act(&g.bracket(&unit(n, i), &unit(n, j)));
                if lhs != m.action[i].commutator(&m.action[j]) {
                    return Err(Error::NotRepresentation(format!(
                        "{}: bracket [{}, {}] is not preserved",
                        m.name,
                        g.label(i),
                        g.label(j)
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn trivial(g: &LieAlgebra) -> Self {
        GModule { name: "trivial".into(), dim: 1, action: vec![Matrix::zero(1, 1); g.dim()] }
    }

    pub fn adjoint(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let action = (0..n)
            .map(|a| {
                let mut m = Matrix::zero(n, n);
                for j in 0..n {
                    for (i, c) in g.bracket(&unit(n, a), &unit(n, j)).into_iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                m
            })
            .collect();
        GModule { name: "adjoint".into(), dim: n, action }
    }

    /// The irreducible sl2-module of highest weight `n`, for a basis ordered `(h, e, f)`.
    pub fn sl2_irrep(n: usize) -> Self {
        let d = n + 1;
        let mut h = Matrix::zero(d, d);
        let mut e = Matrix::zero(d, d);
        let mut f = Matrix::zero(d, d);
        for k in 0..d {
            h.set(k, k, Scalar::from_int(n as i64 - 2 * k as i64));
            if k + 1 < d {
                f.set(k + 1, k, Scalar::from_int(k as i64 + 1));
            }
            if k >= 1 {
                e.set(k - 1, k, Scalar::from_int((n - k + 1) as i64));
            }
        }
        GModule { name: format!("V{n}"), dim: d, action: vec![h, e, f] }
    }

    pub fn direct_sum(&self, other: &GModule) -> GModule {
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zero(d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        GModule { name: format!("{}+{}", self.name, other.name), dim: d, action }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// `ρ(x)` for `x` in coordinates.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                m = &m + &a.scale(c);
            }
        }
        m
    }
}

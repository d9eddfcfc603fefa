use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use super::exterior::{bits, degree, ExteriorElement, Mask};
use crate::error::Result;
use crate::liealg::{Coords, LieAlgebra, QuadraticSpace};
use crate::scalar::Scalar;

/// `Λ(V)` for a quadratic space `V`, carrying contraction and the Clifford product `⊙`.
#[derive(Debug)]
pub struct Clifford {
    space: QuadraticSpace,
    exp_coefficient: Scalar,
    table: Mutex<HashMap<(Mask, Mask), Vec<(Mask, Scalar)>>>,
}

impl Clone for Clifford {
    fn clone(&self) -> Self {
        Clifford::with_exp_coefficient(self.space.clone(), self.exp_coefficient.clone())
    }
}

impl Clifford {
    pub fn new(space: QuadraticSpace) -> Self {
        Clifford::with_exp_coefficient(space, Scalar::frac(-1, 2))
    }

    /// Uses `Exp(c·Σ_k i¹_{a_k} i²_{b_k})` in place of `c = -1/2`.
    ///
    /// Only meaningful as a negative control: any other coefficient breaks the Clifford relation.
    pub fn with_exp_coefficient(space: QuadraticSpace, c: Scalar) -> Self {
        Clifford { space, exp_coefficient: c, table: Mutex::new(HashMap::new()) }
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.space.labels()
    }

    pub fn zero(&self) -> ExteriorElement {
        ExteriorElement::zero(self.dim())
    }

    pub fn one(&self) -> ExteriorElement {
        ExteriorElement::one(self.dim())
    }

    pub fn scalar(&self, c: Scalar) -> ExteriorElement {
        ExteriorElement::scalar(self.dim(), c)
    }

    pub fn generator(&self, i: usize) -> ExteriorElement {
        ExteriorElement::generator(self.dim(), i)
    }

    /// `c_v` for `v` in this space's coordinates.
    pub fn vector(&self, v: &[Scalar]) -> ExteriorElement {
        ExteriorElement::vector(v)
    }

    fn inner_with_basis(&self, v: &[Scalar], j: usize) -> Scalar {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| c * &self.space.gram()[i][j]).sum()
    }

    /// `ī_v`, the odd derivation with `ī_v w = <v, w>` on degree one.
    pub fn contract(&self, v: &[Scalar], x: &ExteriorElement) -> ExteriorElement {
        let mut out = ExteriorElement::zero(self.dim());
        for j in 0..self.dim() {
            let c = self.inner_with_basis(v, j);
            if !c.is_zero() {
                out.add_scaled(&c, &x.partial(j));
            }
        }
        out
    }

    /// Contraction by a multivector, `ī_{u_1∧…∧u_k} = ī_{u_k} ∘ … ∘ ī_{u_1}`,
    /// so that `ī_ξ η` is the determinant pairing when `deg ξ = deg η`.
    pub fn contract_multi(&self, xi: &ExteriorElement, x: &ExteriorElement) -> ExteriorElement {
        let n = self.dim();
        let mut out = ExteriorElement::zero(n);
        for (m, c) in xi.terms() {
            let mut acc = x.clone();
            for i in bits(*m) {
                let basis: Coords = (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect();
                acc = self.contract(&basis, &acc);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    fn monomial_product(&self, a: Mask, b: Mask) -> Vec<(Mask, Scalar)> {
        if let Some(v) = self.table.lock().expect("table lock").get(&(a, b)) {
            return v.clone();
        }
        let n = self.dim();
        let gram = self.space.gram();
        let mut total: BTreeMap<Mask, Scalar> = BTreeMap::new();
        let mut cur: BTreeMap<(Mask, Mask), Scalar> = BTreeMap::new();
        cur.insert((a, b), Scalar::one());
        let mut step = 0i64;
        loop {
            for ((x, y), c) in &cur {
                if let Some(neg) = super::exterior::wedge_sign(*x, *y) {
                    let e = total.entry(x | y).or_insert_with(Scalar::zero);
                    if neg {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
            step += 1;
            let mut next: BTreeMap<(Mask, Mask), Scalar> = BTreeMap::new();
            for ((x, y), c) in &cur {
                let sign_x = degree(*x) % 2 == 1;
                for j in bits(*x) {
                    let dx = ExteriorElement::monomial(n, *x, Scalar::one()).partial(j);
                    let (&mx, cx) = dx.terms().iter().next().expect("nonzero partial");
                    for k in bits(*y) {
                        let g = &gram[k][j];
                        if g.is_zero() {
                            continue;
                        }
                        let dy = ExteriorElement::monomial(n, *y, Scalar::one()).partial(k);
                        let (&my, cy) = dy.terms().iter().next().expect("nonzero partial");
                        let mut coef = &(&(c * g) * &(cx * cy)) * &self.exp_coefficient;
                        if sign_x {
                            coef = -coef;
                        }
                        let e = next.entry((mx, my)).or_insert_with(Scalar::zero);
                        *e += &coef;
                    }
                }
            }
            let inv = Scalar::frac(1, step);
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, &c * &inv)).collect();
            if cur.is_empty() {
                break;
            }
        }
        let v: Vec<(Mask, Scalar)> = total.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.table.lock().expect("table lock").insert((a, b), v.clone());
        v
    }

    /// The Clifford product transported to `Λ(V)` through the symbol map.
    pub fn odot(&self, x: &ExteriorElement, y: &ExteriorElement) -> Result<ExteriorElement> {
        x.check_ambient(y)?;
        let mut out = ExteriorElement::zero(self.dim());
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                let cd = c * d;
                for (m, e) in self.monomial_product(*a, *b) {
                    out.add_term(m, &cd * &e);
                }
            }
        }
        Ok(out)
    }

    /// `x ⊙ y - (-1)^{|x||y|} y ⊙ x` for homogeneous-parity `x`, `y`.
    pub fn super_commutator(&self, x: &ExteriorElement, y: &ExteriorElement) -> Result<ExteriorElement> {
        let both_odd = x.parity() == Some(true) && y.parity() == Some(true);
        let xy = self.odot(x, y)?;
        let yx = self.odot(y, x)?;
        Ok(if both_odd { xy.plus(&yx) } else { xy.minus(&yx) })
    }

    /// Koszul differential, for `V` the underlying space of the Lie algebra `lie`
    /// (same basis), transported from `Λ(V*)` through the form.
    pub fn koszul(&self, lie: &LieAlgebra, x: &ExteriorElement) -> ExteriorElement {
        let images = self.koszul_generators(lie);
        x.derivation(&images, true)
    }

    /// `d_∧ v_a = -Σ_{i<j} <v_a, [w_i, w_j]> v_i ∧ v_j` with `{w_i}` the dual basis.
    pub fn koszul_generators(&self, lie: &LieAlgebra) -> Vec<ExteriorElement> {
        let n = self.dim();
        assert_eq!(lie.dim(), n, "Koszul differential needs the Lie algebra on the same basis");
        let dual = self.space.dual_basis();
        let mut brackets = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                brackets[i][j] = lie.bracket(&dual[i], &dual[j]);
            }
        }
        (0..n)
            .map(|a| {
                let va: Coords = (0..n).map(|t| if t == a { Scalar::one() } else { Scalar::zero() }).collect();
                let mut out = ExteriorElement::zero(n);
                for i in 0..n {
                    for j in i + 1..n {
                        let c = self.space.inner(&va, &brackets[i][j]);
                        out.add_term(1 << i | 1 << j, -c);
                    }
                }
                out
            })
            .collect()
    }

    /// Even derivation extending a linear map on generators (e.g. `ad x`).
    pub fn derivation_from_matrix(&self, columns: &[Coords], x: &ExteriorElement) -> ExteriorElement {
        let images: Vec<ExteriorElement> = columns.iter().map(|c| ExteriorElement::vector(c)).collect();
        x.derivation(&images, false)
    }

    /// All basis monomials, ordered by mask.
    pub fn monomials(&self) -> impl Iterator<Item = Mask> {
        0..(1u64 << self.dim())
    }
}

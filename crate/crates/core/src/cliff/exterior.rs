use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Mask = u64;

pub fn degree(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Sign of moving the generators of `b` past those of `a` when forming `a ∧ b`;
/// `None` if they share a generator.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        swaps += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(swaps % 2 == 1)
}

/// Sign `(-1)^{number of generators of m before i}`; true means negative.
pub fn position_sign(m: Mask, i: usize) -> bool {
    (m & ((1u64 << i) - 1)).count_ones() % 2 == 1
}

pub fn bits(m: Mask) -> impl Iterator<Item = usize> {
    let mut rest = m;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// An element of the exterior algebra over a `dim`-dimensional space,
/// indexed by subsets of the basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExteriorElement {
    dim: usize,
    terms: BTreeMap<Mask, Scalar>,
}

impl ExteriorElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 63, "exterior algebras are limited to 63 generators");
        ExteriorElement { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Scalar) -> Self {
        let mut x = ExteriorElement::zero(dim);
        x.add_term(0, c);
        x
    }

    pub fn one(dim: usize) -> Self {
        ExteriorElement::scalar(dim, Scalar::one())
    }

    pub fn monomial(dim: usize, mask: Mask, c: Scalar) -> Self {
        let mut x = ExteriorElement::zero(dim);
        x.add_term(mask, c);
        x
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        ExteriorElement::monomial(dim, 1 << i, Scalar::one())
    }

    /// The degree-one element with the given coordinates.
    pub fn vector(coords: &[Scalar]) -> Self {
        let mut x = ExteriorElement::zero(coords.len());
        for (i, c) in coords.iter().enumerate() {
            x.add_term(1 << i, c.clone());
        }
        x
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Mask, Scalar)>) -> Self {
        let mut x = ExteriorElement::zero(dim);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Mask, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: Mask) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mask, c: Scalar) {
        debug_assert!(m >> self.dim == 0, "mask outside the ambient space");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &ExteriorElement) {
        for (m, x) in &other.terms {
            self.add_term(*m, c * x);
        }
    }

    pub fn plus(&self, other: &ExteriorElement) -> ExteriorElement {
        let mut x = self.clone();
        x.add_scaled(&Scalar::one(), other);
        x
    }

    pub fn minus(&self, other: &ExteriorElement) -> ExteriorElement {
        let mut x = self.clone();
        x.add_scaled(&Scalar::from_int(-1), other);
        x
    }

    pub fn scale(&self, c: &Scalar) -> ExteriorElement {
        let mut x = ExteriorElement::zero(self.dim);
        x.add_scaled(c, self);
        x
    }

    pub fn neg(&self) -> ExteriorElement {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn check_ambient(&self, other: &ExteriorElement) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::AmbientMismatch(format!("Λ of dimension {} vs {}", self.dim, other.dim)));
        }
        Ok(())
    }

    /// Parity if homogeneous (true = odd).
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|m| degree(*m) % 2 == 1);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn grade(&self, k: usize) -> ExteriorElement {
        ExteriorElement::from_terms(
            self.dim,
            self.terms.iter().filter(|(m, _)| degree(**m) == k).map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| degree(*m)).max()
    }

    pub fn is_homogeneous_of(&self, k: usize) -> bool {
        self.terms.keys().all(|m| degree(*m) == k)
    }

    pub fn wedge(&self, other: &ExteriorElement) -> Result<ExteriorElement> {
        self.check_ambient(other)?;
        let mut out = ExteriorElement::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(neg) = wedge_sign(*a, *b) {
                    let c = x * y;
                    out.add_term(a | b, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Coordinate derivative `∂_i`: removes generator `i` with the Koszul sign.
    pub fn partial(&self, i: usize) -> ExteriorElement {
        let mut out = ExteriorElement::zero(self.dim);
        for (m, c) in &self.terms {
            if m >> i & 1 == 1 {
                out.add_term(m & !(1 << i), if position_sign(*m, i) { -c } else { c.clone() });
            }
        }
        out
    }

    /// Extends `v_i ↦ images[i]` to an algebra homomorphism into Λ of dimension `dim`.
    pub fn substitute(&self, images: &[ExteriorElement], dim: usize) -> ExteriorElement {
        let mut out = ExteriorElement::zero(dim);
        for (m, c) in &self.terms {
            let mut acc = ExteriorElement::one(dim);
            for i in bits(*m) {
                acc = acc.wedge(&images[i]).expect("images share the target ambient");
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    /// Extends `v_i ↦ images[i]` to an even (or odd) derivation.
    pub fn derivation(&self, images: &[ExteriorElement], odd: bool) -> ExteriorElement {
        let mut out = ExteriorElement::zero(self.dim);
        for (m, c) in &self.terms {
            for (pos, i) in bits(*m).enumerate() {
                let before = bits(*m).take(pos).fold(0u64, |a, j| a | 1 << j);
                let after = m & !before & !(1 << i);
                let left = ExteriorElement::monomial(self.dim, before, Scalar::one());
                let right = ExteriorElement::monomial(self.dim, after, Scalar::one());
                let term = left.wedge(&images[i]).and_then(|x| x.wedge(&right)).expect("same ambient");
                let neg = odd && pos % 2 == 1;
                out.add_scaled(&if neg { -c } else { c.clone() }, &term);
            }
        }
        out
    }

    /// Human-readable form with the given generator labels.
    pub fn format_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut keys: Vec<&Mask> = self.terms.keys().collect();
        keys.sort_by_key(|m| (std::cmp::Reverse(degree(**m)), **m));
        let mut s = String::new();
        for (k, m) in keys.into_iter().enumerate() {
            let c = &self.terms[m];
            let word: Vec<&str> = bits(*m).map(|i| labels[i].as_str()).collect();
            let word = word.join("∧");
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) if c.is_rational() => (true, b.to_string()),
                _ => (false, cs.clone()),
            };
            let body = if !c.is_rational() { format!("({cs})") } else { body };
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            if word.is_empty() {
                s.push_str(&body);
            } else if body == "1" {
                s.push_str(&word);
            } else {
                let _ = write!(s, "{body} {word}");
            }
        }
        s
    }
}

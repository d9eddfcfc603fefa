use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::scalar::Scalar;

/// Exponent vector `x_1^{k_1} ⋯ x_n^{k_n}`, ordered by total degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(e: Vec<u16>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    /// Generators in nondecreasing order, e.g. `x_1^2 x_3 -> [0, 0, 2]`.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i).take(k as usize)).collect()
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut m = Monomial::one(n);
        for &i in word {
            m.0[i] += 1;
        }
        m
    }

    pub fn last_index(&self) -> Option<usize> {
        self.0.iter().rposition(|&k| k > 0)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn with_incremented(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    pub fn with_decremented(&self, i: usize) -> Option<Monomial> {
        let mut m = self.clone();
        m.0[i] = m.0[i].checked_sub(1)?;
        Some(m)
    }

    /// All monomials in `n` variables of total degree at most `cap`, in order.
    pub fn up_to(n: usize, cap: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        for d in 0..=cap {
            let mut cur = vec![0u16; n];
            fill(&mut out, &mut cur, 0, d);
        }
        out.sort();
        out
    }

    pub fn format_with(&self, labels: &[String]) -> String {
        let mut s = String::new();
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&labels[i]);
            if k > 1 {
                let _ = write!(s, "^{k}");
            }
        }
        s
    }
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u16>, pos: usize, left: usize) {
    if pos + 1 == cur.len() {
        cur[pos] = left as u16;
        out.push(Monomial(cur.clone()));
        cur[pos] = 0;
        return;
    }
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    for k in (0..=left).rev() {
        cur[pos] = k as u16;
        fill(out, cur, pos + 1, left - k);
    }
    cur[pos] = 0;
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

/// A linear combination of monomials in `n` variables.
///
/// Used for PBW-ordered elements of `U(g)` and for commutative polynomials in `S(g)`;
/// the product depends on which algebra the caller works in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        let mut p = Poly::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Poly::monomial(Monomial::generator(n, i), Scalar::one())
    }

    /// The degree-one element with the given coordinates.
    pub fn vector(coords: &[Scalar]) -> Self {
        let n = coords.len();
        let mut p = Poly::zero(n);
        for (i, c) in coords.iter().enumerate() {
            p.add_term(Monomial::generator(n, i), c.clone());
        }
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of the highest term; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
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

    pub fn add_scaled(&mut self, c: &Scalar, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), c * x);
        }
    }

    pub fn plus(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(&Scalar::one(), other);
        p
    }

    pub fn minus(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        p.add_scaled(&Scalar::from_int(-1), other);
        p
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let mut p = Poly::zero(self.n);
        p.add_scaled(c, self);
        p
    }

    pub fn neg(&self) -> Poly {
        self.scale(&Scalar::from_int(-1))
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Poly {
        Poly::from_terms(
            self.n,
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Commutative product.
    pub fn sym_mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                p.add_term(a.times(b), x * y);
            }
        }
        p
    }

    /// `∂/∂x_i` of the commutative polynomial.
    pub fn partial(&self, i: usize) -> Poly {
        let mut p = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let k = m.exponents()[i];
            if k > 0 {
                p.add_term(m.with_decremented(i).expect("positive"), c * &Scalar::from_int(k as i64));
            }
        }
        p
    }

    /// Commutative substitution `x_i ↦ images[i]` (all images in the same number of variables).
    pub fn sym_substitute(&self, images: &[Poly], n: usize) -> Poly {
        let mut out = Poly::zero(n);
        for (m, c) in &self.terms {
            let mut acc = Poly::one(n);
            for i in m.word() {
                acc = acc.sym_mul(&images[i]);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    pub fn format_with(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let word = m.format_with(labels);
            let cs = c.to_string();
            let (neg, body) = match cs.strip_prefix('-') {
                Some(b) if c.is_rational() => (true, b.to_string()),
                _ if !c.is_rational() => (false, format!("({cs})")),
                _ => (false, cs.clone()),
            };
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

//! `Λ(V) ≅ Cl(V)`: exterior and Clifford products, contractions, the Koszul
//! differential and the Cartan 3-form.

mod clifford;
mod exterior;

pub use clifford::Clifford;
pub use exterior::{bits, degree, position_sign, wedge_sign, ExteriorElement, Mask};

use crate::liealg::{Part, QuadraticPair, QuadraticSpace};
use crate::scalar::Scalar;

/// `Λ(W)` for a part of the pair with its restricted form.
pub fn clifford(pair: &QuadraticPair, part: Part) -> Clifford {
    Clifford::new(pair.space(part).clone())
}

/// The Cartan element `γ_W ∈ Λ³(W)` whose determinant pairing with `x∧y∧z`
/// is `<x, [y, z]>`, in the coordinates of `W`.
pub fn cartan_element(pair: &QuadraticPair, part: Part) -> ExteriorElement {
    let space = pair.space(part);
    trilinear_element(space, |x, y, z| pair.inner(&space.embed(x), &pair.bracket(&space.embed(y), &space.embed(z))))
}

/// The element of `Λ³(W)` whose determinant pairing with `x∧y∧z` is `f(x, y, z)`
/// for an alternating `f` given on coordinates of `W`.
pub fn trilinear_element(
    space: &QuadraticSpace,
    f: impl Fn(&[Scalar], &[Scalar], &[Scalar]) -> Scalar,
) -> ExteriorElement {
    let dual = space.dual_basis();
    let n = dual.len();
    let mut out = ExteriorElement::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.add_term(1 << i | 1 << j | 1 << k, f(&dual[i], &dual[j], &dual[k]));
            }
        }
    }
    out
}

/// The element of `Λ²(W)` whose determinant pairing with `x∧y` is `f(x, y)`.
pub fn bilinear_element(space: &QuadraticSpace, f: impl Fn(&[Scalar], &[Scalar]) -> Scalar) -> ExteriorElement {
    let dual = space.dual_basis();
    let n = dual.len();
    let mut out = ExteriorElement::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            out.add_term(1 << i | 1 << j, f(&dual[i], &dual[j]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::liealg::unit;

    fn half() -> Scalar {
        Scalar::frac(1, 2)
    }

    #[test]
    fn wedge_basics() {
        let (e, f, h) =
            (ExteriorElement::generator(3, 1), ExteriorElement::generator(3, 2), ExteriorElement::generator(3, 0));
        let ef = e.wedge(&f).unwrap();
        assert_eq!(f.wedge(&e).unwrap(), ef.neg());
        assert!(e.wedge(&e).unwrap().is_zero());
        // (e∧f)∧h = h∧e∧f after two transpositions
        assert_eq!(ef.wedge(&h).unwrap(), ExteriorElement::monomial(3, 0b111, Scalar::one()));
        assert!(e.wedge(&ExteriorElement::zero(2)).is_err());
    }

    #[test]
    fn contraction_in_p() {
        let pair = fixtures::sl2();
        let cl = clifford(&pair, Part::P);
        let (e, f) = (cl.generator(0), cl.generator(1));
        assert_eq!(cl.contract(&unit(2, 0), &f), cl.one());
        assert!(cl.contract(&unit(2, 0), &cl.one()).is_zero());
        let ef = e.wedge(&f).unwrap();
        assert_eq!(cl.contract(&unit(2, 0), &ef), e.neg());
    }

    #[test]
    fn clifford_product_in_p() {
        let pair = fixtures::sl2();
        let cl = clifford(&pair, Part::P);
        let (e, f) = (cl.generator(0), cl.generator(1));
        let want = e.wedge(&f).unwrap().plus(&cl.scalar(half()));
        assert_eq!(cl.odot(&e, &f).unwrap(), want);
        let ef = e.wedge(&f).unwrap();
        assert_eq!(cl.odot(&ef, &cl.one()).unwrap(), ef);
        assert_eq!(cl.odot(&cl.one(), &ef).unwrap(), ef);
    }

    #[test]
    fn clifford_relation_and_associativity() {
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            for part in [Part::G, Part::P] {
                let cl = clifford(&pair, part);
                let n = cl.dim();
                for i in 0..n {
                    for j in 0..n {
                        let (x, y) = (cl.generator(i), cl.generator(j));
                        let s = cl.odot(&x, &y).unwrap().plus(&cl.odot(&y, &x).unwrap());
                        assert_eq!(s, cl.scalar(pair.space(part).gram()[i][j].clone()), "{name}");
                    }
                }
                if n <= 4 {
                    let all: Vec<ExteriorElement> =
                        cl.monomials().map(|m| ExteriorElement::monomial(n, m, Scalar::one())).collect();
                    for a in &all {
                        for b in &all {
                            let ab = cl.odot(a, b).unwrap();
                            for c in &all {
                                let l = cl.odot(&ab, c).unwrap();
                                let r = cl.odot(a, &cl.odot(b, c).unwrap()).unwrap();
                                assert_eq!(l, r, "{name}");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn contraction_is_a_derivation_of_both_products() {
        let pair = fixtures::sl2();
        let cl = clifford(&pair, Part::G);
        let all: Vec<ExteriorElement> =
            cl.monomials().map(|m| ExteriorElement::monomial(3, m, Scalar::one())).collect();
        for a in 0..3 {
            let v = unit(3, a);
            for x in &all {
                let sign = if x.parity() == Some(true) { Scalar::from_int(-1) } else { Scalar::one() };
                for y in &all {
                    let lhs = cl.contract(&v, &x.wedge(y).unwrap());
                    let mut rhs = cl.contract(&v, x).wedge(y).unwrap();
                    rhs.add_scaled(&sign, &x.wedge(&cl.contract(&v, y)).unwrap());
                    assert_eq!(lhs, rhs);

                    let lhs = cl.contract(&v, &cl.odot(x, y).unwrap());
                    let mut rhs = cl.odot(&cl.contract(&v, x), y).unwrap();
                    rhs.add_scaled(&sign, &cl.odot(x, &cl.contract(&v, y)).unwrap());
                    assert_eq!(lhs, rhs);

                    // the top-degree part of x ⊙ y is x ∧ y
                    let k = x.max_degree().unwrap() + y.max_degree().unwrap();
                    assert_eq!(cl.odot(x, y).unwrap().grade(k), x.wedge(y).unwrap().grade(k));
                }
            }
        }
    }

    #[test]
    fn corrupted_exponential_breaks_the_relation() {
        let pair = fixtures::sl2();
        let bad = Clifford::with_exp_coefficient(pair.space(Part::P).clone(), half());
        let (e, f) = (bad.generator(0), bad.generator(1));
        let s = bad.odot(&e, &f).unwrap().plus(&bad.odot(&f, &e).unwrap());
        assert_ne!(s, bad.one());
    }

    #[test]
    fn cartan_elements() {
        let pair = fixtures::sl2();
        assert_eq!(cartan_element(&pair, Part::G), ExteriorElement::monomial(3, 0b111, Scalar::from_int(-1)));
        assert!(cartan_element(&pair, Part::P).is_zero());
        assert!(cartan_element(&fixtures::diagonal(), Part::P).is_zero());
        assert!(!cartan_element(&fixtures::pair("sl2-point"), Part::P).is_zero());
        assert!(!cartan_element(&fixtures::pair("sl3-cartan"), Part::P).is_zero());
    }

    #[test]
    fn cartan_element_pairs_to_the_trilinear_form() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "so4-so3"] {
            let pair = fixtures::pair(name);
            let cl = clifford(&pair, Part::G);
            let gamma = cartan_element(&pair, Part::G);
            let n = cl.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let xyz = cl.generator(i).wedge(&cl.generator(j)).unwrap().wedge(&cl.generator(k)).unwrap();
                        let paired = cl.contract_multi(&xyz, &gamma).coeff(0);
                        let want = pair.inner(&unit(n, i), &pair.bracket(&unit(n, j), &unit(n, k)));
                        assert_eq!(paired, want, "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_element_is_invariant() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "gl2-center"] {
            let pair = fixtures::pair(name);
            let cl = clifford(&pair, Part::G);
            let gamma = cartan_element(&pair, Part::G);
            let n = cl.dim();
            for a in 0..n {
                let cols: Vec<_> = (0..n).map(|j| pair.bracket(&unit(n, a), &unit(n, j))).collect();
                assert!(cl.derivation_from_matrix(&cols, &gamma).is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn koszul_differential() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "abelian-plane"] {
            let pair = fixtures::pair(name);
            let cl = clifford(&pair, Part::G);
            let n = cl.dim();
            let gamma = cartan_element(&pair, Part::G);
            for m in cl.monomials() {
                let x = ExteriorElement::monomial(n, m, Scalar::one());
                assert!(cl.koszul(pair.g(), &cl.koszul(pair.g(), &x)).is_zero(), "{name}");
            }
            for a in 0..n {
                // d_∧ c_a = -ī_a γ
                let lhs = cl.koszul(pair.g(), &cl.generator(a));
                assert_eq!(lhs, cl.contract(&unit(n, a), &gamma).neg(), "{name}");
            }
            if pair.g().is_abelian() {
                assert!(cl.koszul_generators(pair.g()).iter().all(|x| x.is_zero()));
            }
        }
    }
}

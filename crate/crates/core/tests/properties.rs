use proptest::prelude::*;

use cubic_dirac::cliff::{clifford, ExteriorElement};
use cubic_dirac::dirac::DiracAlgebra;
use cubic_dirac::exactlin::{SparseMatrix, SparseVec, Subspace};
use cubic_dirac::fixtures;
use cubic_dirac::liealg::{Part, QuadraticSpace};
use cubic_dirac::specrep::{DiracMatrix, GModule, SpinorModule};
use cubic_dirac::uenv::{Monomial, Poly, Uenv};
use cubic_dirac::{Field, Scalar};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -3i64..=3).prop_map(|(n, d, im)| {
        let re = Scalar::frac(n, d);
        if im == 0 {
            re
        } else {
            &re + &(&Scalar::i() * &Scalar::frac(im, d))
        }
    })
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn dense_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(Scalar::from_int), cols), rows)
}

fn exterior(dim: usize) -> impl Strategy<Value = ExteriorElement> {
    prop::collection::vec((0u64..1 << dim, rational()), 0..5)
        .prop_map(move |terms| ExteriorElement::from_terms(dim, terms))
}

fn poly(n: usize, deg: u16) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..=deg, n), rational()), 0..4).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(e, _)| e.iter().sum::<u16>() <= deg);
        Poly::from_terms(n, terms.map(|(e, c)| (Monomial::from_exponents(e), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if let Some(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn scalar_strings_round_trip(a in scalar()) {
        let parsed: Scalar = a.to_exact_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, seed in dense_matrix(6, 6)) {
        let data: Vec<Vec<Scalar>> = seed[..rows].iter().map(|r| r[..cols].to_vec()).collect();
        let m = SparseMatrix::from_dense(&data);
        let kernel = Subspace::kernel(&m);
        let image = Subspace::image(&m);
        prop_assert_eq!(kernel.dim() + image.dim(), cols);
        for v in kernel.basis() {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(a in dense_matrix(3, 5), b in dense_matrix(3, 5)) {
        let span = |rows: &[Vec<Scalar>]| {
            Subspace::from_owned(5, rows.iter().map(|r| SparseVec::from_dense(r)).collect()).unwrap()
        };
        let (u, v) = (span(&a), span(&b));
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&v).unwrap());
    }

    #[test]
    fn clifford_product_is_associative(x in exterior(3), y in exterior(3), z in exterior(3)) {
        let cl = clifford(&fixtures::diagonal(), Part::P);
        let left = cl.odot(&cl.odot(&x, &y).unwrap(), &z).unwrap();
        let right = cl.odot(&x, &cl.odot(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn clifford_relation_on_vectors(x in prop::collection::vec(rational(), 3), y in prop::collection::vec(rational(), 3)) {
        let cl = clifford(&fixtures::diagonal(), Part::P);
        let (cx, cy) = (cl.vector(&x), cl.vector(&y));
        let anti = cl.odot(&cx, &cy).unwrap().plus(&cl.odot(&cy, &cx).unwrap());
        prop_assert_eq!(anti, cl.scalar(cl.space().inner(&x, &y)));
    }

    #[test]
    fn pbw_product_is_associative(a in poly(3, 1), b in poly(3, 1), c in poly(3, 1)) {
        let u = Uenv::new(fixtures::sl2().g().clone(), 3);
        let left = u.mul(&u.mul(&a, &b).unwrap(), &c).unwrap();
        let right = u.mul(&a, &u.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn xi_is_multiplicative(a in poly(3, 1), b in poly(3, 1)) {
        let d = DiracAlgebra::new(&fixtures::diagonal(), 2).unwrap();
        let ur = d.uenv_r();
        let lhs = d.xi(&ur.mul(&a, &b).unwrap()).unwrap();
        let rhs = d.algebra().mul(&d.xi(&a).unwrap(), &d.xi(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dirac_matrix_commutes_with_xi(n in 0usize..7) {
        let d = DiracAlgebra::new(&fixtures::sl2(), 1).unwrap();
        let dm = DiracMatrix::new(&d, &GModule::sl2_irrep(n), Field::Rational).unwrap();
        prop_assert!(dm.commutes_with_xi());
        prop_assert_eq!(dm.kernel().dim() + dm.image().dim(), dm.dim());
        prop_assert_eq!(dm.cohomology().unwrap().dim(), 2);
    }

    #[test]
    fn spinors_for_diagonal_forms(entries in prop::collection::vec(prop::sample::select(vec![2i64, -2, 8, -8]), 0..5)) {
        let n = entries.len();
        let gram: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| Scalar::from_int(if i == j { entries[i] } else { 0 })).collect())
            .collect();
        let space = QuadraticSpace::from_gram(gram).unwrap();
        let s = SpinorModule::new(&space, Field::Gaussian).unwrap();
        prop_assert!(s.check_relations());
        prop_assert_eq!(s.dim(), 1usize << (n / 2));
    }
}

//! Weil algebras `W(g)`, `𝒲(g)` and their Cartan models.

mod cartan;
mod flip;
mod maps;
mod mixed;
mod nc;
mod weil;

pub use cartan::{BDatum, BSlice, BTensor, CartanModel};
pub use flip::TensorSquare;
pub use maps::InductionMaps;
pub use mixed::{masks_within, Mixed, MixedAlgebra, MixedSlice};
pub use nc::{basis_vectors, cubic_element, FourTermSigns, NcWeil};
pub use weil::Weil;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliff::ExteriorElement;
    use crate::dirac::DiracAlgebra;
    use crate::exactlin::{SparseVec, Subspace};
    use crate::fixtures;
    use crate::liealg::{unit, Coords, InvariantForm, LieAlgebra, Part, QuadraticSpace};
    use crate::uenv::{casimir, Poly, Uenv};
    use crate::Scalar;

    fn sl2_lie() -> (LieAlgebra, InvariantForm) {
        let pair = fixtures::sl2();
        (pair.g().clone(), pair.form().clone())
    }

    fn nc_sl2(cap: usize) -> NcWeil {
        let (g, b) = sl2_lie();
        NcWeil::new(g, b, cap).unwrap()
    }

    fn combo(lie: &LieAlgebra, a: usize, b: usize) -> Coords {
        let n = lie.dim();
        lie.bracket(&unit(n, a), &unit(n, b))
    }

    fn same_space(a: &Subspace, b: &Subspace) -> bool {
        a.is_subspace_of(b).unwrap() && b.is_subspace_of(a).unwrap()
    }

    #[test]
    fn weil_relations_and_d_squared() {
        let (g, b) = sl2_lie();
        let w = Weil::new(g.clone(), &b).unwrap();
        let n = g.dim();
        for x in w.slice(2).basis() {
            for a in 0..n {
                let ua = unit(n, a);
                let cartan = w.i(&ua, &w.d(&x)).plus(&w.d(&w.i(&ua, &x)));
                assert_eq!(cartan, w.l(&ua, &x));
                for c in 0..n {
                    let uc = unit(n, c);
                    let ab = combo(&g, a, c);
                    let li = w.l(&ua, &w.i(&uc, &x)).minus(&w.i(&uc, &w.l(&ua, &x)));
                    assert_eq!(li, w.i(&ab, &x));
                    let ll = w.l(&ua, &w.l(&uc, &x)).minus(&w.l(&uc, &w.l(&ua, &x)));
                    assert_eq!(ll, w.l(&ab, &x));
                }
            }
            assert!(w.d(&w.d(&x)).is_zero(), "{}", w.format(&x));
        }
        assert_eq!(w.format(&w.d(&w.e(0))), "s_h⊗1 + 2 1⊗e_e∧e_f");
    }

    #[test]
    fn weil_algebra_on_every_fixture_has_d_squared_zero() {
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            let w = Weil::new(pair.g().clone(), pair.form()).unwrap();
            for x in w.slice(1).basis() {
                assert!(w.d(&w.d(&x)).is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn noncommutative_weil_relations() {
        let w = nc_sl2(3);
        let lie = w.algebra().lie().clone();
        let n = w.dim();
        for x in w.algebra().slice(2).basis() {
            let dx = w.d(&x).unwrap();
            for a in 0..n {
                let ua = unit(n, a);
                let cartan = w.i(&ua, &dx).plus(&w.d(&w.i(&ua, &x)).unwrap());
                assert_eq!(cartan, w.l(&ua, &x));
                for c in 0..n {
                    let uc = unit(n, c);
                    let ab = combo(&lie, a, c);
                    let li = w.l(&ua, &w.i(&uc, &x)).minus(&w.i(&uc, &w.l(&ua, &x)));
                    assert_eq!(li, w.i(&ab, &x));
                    let ll = w.l(&ua, &w.l(&uc, &x)).minus(&w.l(&uc, &w.l(&ua, &x)));
                    assert_eq!(ll, w.l(&ab, &x));
                }
            }
        }
        let ce = w.c(1);
        let h = unit(3, 0);
        let lhs = w.i(&h, &w.d(&ce).unwrap()).plus(&w.d(&w.i(&h, &ce)).unwrap());
        assert_eq!(lhs, ce.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn noncommutative_d_squared_with_headroom() {
        let w = nc_sl2(4);
        for x in w.algebra().slice(2).basis() {
            assert!(w.d(&w.d(&x).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn explicit_formula_matches_ad_dirac() {
        let w = nc_sl2(3);
        let slice = w.algebra().slice(2);
        for x in slice.basis() {
            assert_eq!(w.d(&x).unwrap(), w.explicit_differential(&x, FourTermSigns::AD_DIRAC).unwrap());
        }
        let printed_agrees = slice
            .basis()
            .iter()
            .all(|x| w.d(x).unwrap() == w.explicit_differential(x, FourTermSigns::PRINTED).unwrap());
        assert!(!printed_agrees);
    }

    #[test]
    fn wrong_exp_sign_is_detected() {
        let w = nc_sl2(3).with_exp_coefficient(Scalar::frac(1, 2));
        let cl = w.algebra().clifford();
        let clifford_ok = (0..3).all(|i| {
            (0..3).all(|j| {
                let (x, y) = (cl.generator(i), cl.generator(j));
                let s = cl.odot(&x, &y).unwrap().plus(&cl.odot(&y, &x).unwrap());
                s == cl.scalar(cl.space().gram()[i][j].clone())
            })
        });
        let formula_ok = w
            .algebra()
            .slice(1)
            .basis()
            .iter()
            .all(|x| w.d(x).unwrap() == w.explicit_differential(x, FourTermSigns::AD_DIRAC).unwrap());
        assert!(!(clifford_ok && formula_ok));
    }

    #[test]
    fn dirac_element_is_basis_independent_and_invariant() {
        let w = nc_sl2(3);
        let (g, b) = sl2_lie();
        let alg = w.algebra();
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Coords>();
        let basis = vec![s(&[1, 1, 0]), s(&[0, 1, 2]), s(&[1, 0, -1])];
        let gram = b.restrict(&basis);
        let space = QuadraticSpace::new(vec!["x".into(), "y".into(), "z".into()], gram, basis.clone()).unwrap();
        let mut quadratic = alg.zero();
        for (a, dual) in basis.iter().zip(space.dual_basis()) {
            quadratic = quadratic.plus(&alg.mul(&alg.u_vector(a), &alg.c_vector(&space.embed(&dual))).unwrap());
        }
        let gamma = crate::cliff::trilinear_element(&space, |x, y, z| {
            let (x, y, z) = (space.embed(x), space.embed(y), space.embed(z));
            b.pair(&x, &g.bracket(&y, &z))
        })
        .substitute(&basis.iter().map(|v| ExteriorElement::vector(v)).collect::<Vec<_>>(), 3);
        assert_eq!(&quadratic.minus(&alg.from_w(&gamma)), w.dirac());
        for a in 0..3 {
            assert!(w.l(&unit(3, a), w.dirac()).is_zero());
        }
        let om = casimir(alg.uenv(), &basis_vectors(3), &alg.clifford().space().dual_basis()).unwrap();
        assert!(w.d(&alg.from_u(&om)).unwrap().is_zero());
    }

    #[test]
    fn commutative_cartan_model() {
        let (g, b) = sl2_lie();
        let u = Uenv::new(g.clone(), 3);
        let trivial = CartanModel::new(g.clone(), &b, BDatum::trivial(3)).unwrap();
        let slice = BSlice::new(3, 1, 2);
        for i in 0..slice.len() {
            assert!(trivial.commutative_differential(&slice.basis_element(i)).unwrap().is_zero());
            let x = slice.basis_element(i);
            assert!(trivial.noncommutative_differential(&u, &x).unwrap().is_zero());
        }

        let datum = BDatum::koszul(&g, &b).unwrap();
        datum.validate(&g).unwrap();
        let model = CartanModel::new(g.clone(), &b, datum).unwrap();
        let slice = BSlice::new(3, 8, 2);
        let inv = model.invariants(&u, &slice, true).unwrap();
        assert!(inv.dim() > 1);
        for v in inv.basis() {
            let x = slice.from_vec(v);
            let dx = model.commutative_differential(&x).unwrap();
            assert!(model.commutative_differential(&dx).unwrap().is_zero());
        }

        let abelian = fixtures::pair("abelian-plane");
        let trivial = CartanModel::new(abelian.g().clone(), abelian.form(), BDatum::trivial(2)).unwrap();
        let slice = BSlice::new(2, 1, 3);
        for i in 0..slice.len() {
            assert!(trivial.commutative_differential(&slice.basis_element(i)).unwrap().is_zero());
        }
    }

    #[test]
    fn noncommutative_cartan_model() {
        let (g, b) = sl2_lie();
        let u = Uenv::new(g.clone(), 3);
        let model = CartanModel::new(g.clone(), &b, BDatum::koszul(&g, &b).unwrap()).unwrap();
        let slice = BSlice::new(3, 8, 1);
        let inv = model.invariants(&u, &slice, false).unwrap();
        assert!(inv.dim() > 1);
        for v in inv.basis() {
            let x = slice.from_vec(v);
            let dx = model.noncommutative_differential(&u, &x).unwrap();
            assert!(model.noncommutative_differential(&u, &dx).unwrap().is_zero());
        }
    }

    #[test]
    fn inconsistent_datum_is_rejected() {
        let (g, b) = sl2_lie();
        let one = crate::exactlin::Matrix::identity(1);
        let zero = crate::exactlin::Matrix::zero(1, 1);
        let bad = BDatum::new(
            "bad",
            vec!["1".into()],
            vec![false],
            0,
            vec![vec![SparseVec::unit(0)]],
            Some(zero.clone()),
            vec![one; 3],
            Some(vec![zero; 3]),
        );
        assert!(bad.validate(&g).is_err());
        let pair = fixtures::sl2();
        assert!(BDatum::exterior_slot(pair.space(Part::P), &b).validate(&g).is_err());
    }

    #[test]
    fn odot_on_tensor_products() {
        let pair = fixtures::sl2();
        let (g, b) = sl2_lie();
        let u = Uenv::new(g.clone(), 2);
        let slot = CartanModel::new(g.clone(), &b, BDatum::exterior_slot(pair.space(Part::P), &b)).unwrap();
        let one = Poly::one(3);
        let ce = BTensor::pure(&one, 0b01, 4);
        let cf = BTensor::pure(&one, 0b10, 4);
        let want = BTensor::pure(&one, 0b11, 4).plus(&BTensor::pure(&one, 0, 4).scale(&Scalar::frac(1, 2)));
        assert_eq!(slot.odot(&u, &ce, &cf).unwrap(), want);

        let unit_t = BTensor::pure(&one, 0, 4);
        let x = BTensor::pure(&u.generator(1), 0b01, 4);
        assert_eq!(slot.odot(&u, &unit_t, &x).unwrap(), x);

        let model = CartanModel::new(g.clone(), &b, BDatum::koszul(&g, &b).unwrap()).unwrap();
        let cl = Weil::new(g, &b).unwrap().clifford().clone();
        for s in 0..8u64 {
            for t in 0..8u64 {
                let want = cl
                    .odot(
                        &ExteriorElement::monomial(3, s, Scalar::one()),
                        &ExteriorElement::monomial(3, t, Scalar::one()),
                    )
                    .unwrap();
                let want = SparseVec::from_pairs(want.terms().iter().map(|(m, c)| (*m as usize, c.clone())));
                assert_eq!(model.b_product(s as usize, t as usize).unwrap(), want);
            }
        }
    }

    #[test]
    fn basic_subspace_is_the_point_case_algebra() {
        let pair = fixtures::sl2();
        let w = nc_sl2(3);
        let alg = w.algebra();
        let slice = alg.slice(2);
        let h = pair.basis(Part::R)[0].clone();
        let i_h = |x: &Mixed| alg.contract(&h, x);
        let l_h = |x: &Mixed| alg.lie_derivative(&h, x);
        let basic = slice.common_kernel(&slice, &[&i_h, &l_h]);

        let point = DiracAlgebra::new(&pair, 3).unwrap();
        let p_images: Vec<ExteriorElement> = pair.basis(Part::P).iter().map(|v| ExteriorElement::vector(v)).collect();
        let embed = |x: &Mixed| {
            x.terms().iter().fold(Mixed::zero(3, 3), |acc, (m, p)| {
                acc.plus(&Mixed::tensor(p, &ExteriorElement::monomial(2, *m, Scalar::one()).substitute(&p_images, 3)))
            })
        };
        let independent: Vec<Mixed> = point.invariant_basis(2, None);
        let vecs: Vec<SparseVec> = independent.iter().map(|x| slice.to_vec(&embed(x))).collect();
        let built = Subspace::from_owned(slice.len(), vecs).unwrap();
        assert_eq!(basic.dim(), built.dim());
        assert!(same_space(&basic, &built));

        for x in &independent {
            assert_eq!(w.d(&embed(x)).unwrap(), embed(&point.d(x).unwrap()));
        }

        let point_pair = fixtures::pair("sl2-point");
        let everything = slice.common_kernel(&slice, &[]);
        assert_eq!(everything.dim(), slice.len());
        assert_eq!(point_pair.dim(Part::R), 0);
    }

    #[test]
    fn horizontal_tensors_flip_by_degree_and_are_generated_by_deltas() {
        let (g, b) = sl2_lie();
        let sq = TensorSquare::new(Weil::new(g, &b).unwrap().clifford().clone());
        let mut total = 0;
        for k in 0..=6 {
            let hor = sq.horizontal(Some(k));
            let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
            for v in hor.basis() {
                assert_eq!(sq.flip(v), v.scale(&sign));
            }
            total += hor.dim();
        }
        let hor = sq.horizontal(None);
        assert_eq!(hor.dim(), total);
        let generated = sq.delta_subalgebra();
        assert_eq!(generated.dim(), 8);
        assert!(same_space(&hor, &generated));
    }

    #[test]
    fn classical_induction_map_intertwines() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "gl2-center", "sl3-cartan"] {
            let pair = fixtures::pair(name);
            let point = DiracAlgebra::new(&pair, 1).unwrap();
            let maps = InductionMaps::new(&pair, point.alphas(), 2).unwrap();
            let (wr, wg) = (maps.weil_r(), maps.weil_g());
            let nr = pair.dim(Part::R);
            for x in wr.slice(1).basis() {
                let fx = maps.classical(&x);
                assert_eq!(wg.d(&fx), maps.classical(&wr.d(&x)), "{name}");
                for a in 0..nr {
                    let (ar, ag) = (unit(nr, a), maps.embed(&unit(nr, a)));
                    assert_eq!(wg.i(&ag, &fx), maps.classical(&wr.i(&ar, &x)), "{name}");
                    assert_eq!(wg.l(&ag, &fx), maps.classical(&wr.l(&ar, &x)), "{name}");
                }
            }
            for y in wr.slice(1).basis() {
                for x in wr.slice(1).basis() {
                    assert_eq!(maps.classical(&wr.mul(&x, &y)), wg.mul(&maps.classical(&x), &maps.classical(&y)));
                }
            }
        }
        let pair = fixtures::sl2();
        let maps = InductionMaps::new(&pair, DiracAlgebra::new(&pair, 1).unwrap().alphas(), 1).unwrap();
        assert_eq!(maps.delta(0), &ExteriorElement::monomial(3, 0b110, Scalar::from_int(-2)));
    }

    #[test]
    fn quantum_induction_map_intertwines() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "sl3-cartan"] {
            let pair = fixtures::pair(name);
            let point = DiracAlgebra::new(&pair, 2).unwrap();
            let maps = InductionMaps::new(&pair, point.alphas(), 2).unwrap();
            let (wr, wg) = (maps.nc_r(), maps.nc_g());
            let nr = pair.dim(Part::R);
            for x in wr.algebra().slice(1).basis() {
                let fx = maps.quantum(&x).unwrap();
                assert_eq!(wg.d(&fx).unwrap(), maps.quantum(&wr.d(&x).unwrap()).unwrap(), "{name}");
                for a in 0..nr {
                    let (ar, ag) = (unit(nr, a), maps.embed(&unit(nr, a)));
                    assert_eq!(wg.i(&ag, &fx), maps.quantum(&wr.i(&ar, &x)).unwrap(), "{name}");
                    assert_eq!(wg.l(&ag, &fx), maps.quantum(&wr.l(&ar, &x)).unwrap(), "{name}");
                }
            }
            let p_images: Vec<ExteriorElement> =
                pair.basis(Part::P).iter().map(|v| ExteriorElement::vector(v)).collect();
            let n = pair.g().dim();
            for z in point.uenv_r().invariants(&basis_vectors(nr), 2) {
                let via_xi = point.xi(&z).unwrap().map_w(|m| m.substitute(&p_images, n));
                assert_eq!(maps.quantum(&wr.algebra().from_u(&z)).unwrap(), via_xi, "{name}");
            }
        }
        let pair = fixtures::sl2();
        let maps = InductionMaps::new(&pair, DiracAlgebra::new(&pair, 1).unwrap().alphas(), 1).unwrap();
        let h = maps.nc_r().algebra().u_vector(&unit(1, 0));
        assert_eq!(maps.nc_g().algebra().format(&maps.quantum(&h).unwrap()), "h⊗1 + 2 1⊗e∧f");
    }
}

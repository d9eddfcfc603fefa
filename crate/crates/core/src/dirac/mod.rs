//! The point-case induction algebra `(U(g) ⊗ Cl(p))^r` with the cubic Dirac differential.

mod algebra;
mod theorems;

pub use algebra::DiracAlgebra;
pub use theorems::{
    diagram_sides, eta_duflo, homotopy_residual, restrict_to_r, solve_homotopy, verify_kernel_decomposition, Homotopy,
    KernelDecomposition,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliff::ExteriorElement;
    use crate::exactlin::Subspace;
    use crate::fixtures;
    use crate::liealg::{unit, Part};
    use crate::ncweil::Mixed;
    use crate::uenv::{casimir, Poly};
    use crate::Scalar;

    fn sl2(cap: usize) -> DiracAlgebra {
        DiracAlgebra::new(&fixtures::sl2(), cap).unwrap()
    }

    fn omega(d: &DiracAlgebra) -> Poly {
        let pair = d.pair();
        casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G)).unwrap()
    }

    #[test]
    fn cubic_element_of_the_sl2_pair() {
        let d = sl2(2);
        let alg = d.algebra();
        let want = alg
            .mul(&alg.u_vector(&unit(3, 1)), &alg.c_vector(&unit(2, 1)))
            .unwrap()
            .plus(&alg.mul(&alg.u_vector(&unit(3, 2)), &alg.c_vector(&unit(2, 0))).unwrap());
        assert_eq!(d.dirac(), &want);
        assert_eq!(d.format(d.dirac()), "e⊗f + f⊗e");
    }

    #[test]
    fn cubic_element_is_odd_and_invariant() {
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            let d = DiracAlgebra::new(&pair, 1).unwrap();
            if !d.dirac().is_zero() {
                assert_eq!(d.dirac().parity(), Some(true), "{name}");
            }
            for x in 0..pair.dim(Part::R) {
                assert!(d.l(&unit(pair.dim(Part::R), x))(d.dirac()).is_zero(), "{name}");
            }
        }
        let point = DiracAlgebra::new(&fixtures::pair("sl2-point"), 1).unwrap();
        assert!(!point.gamma().is_zero());
        assert!(DiracAlgebra::new(&fixtures::pair("sl2-full"), 1).unwrap().dirac().is_zero());
    }

    #[test]
    fn alpha_for_the_sl2_pair() {
        let d = sl2(1);
        assert_eq!(d.alphas()[0], ExteriorElement::monomial(2, 0b11, Scalar::from_int(2)));
    }

    #[test]
    fn alpha_defining_property_and_homomorphism() {
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            let d = DiracAlgebra::new(&pair, 1).unwrap();
            let cl = d.algebra().clifford();
            let (nr, np) = (pair.dim(Part::R), pair.dim(Part::P));
            for x in 0..nr {
                let xg = &pair.basis(Part::R)[x];
                let ax = d.alpha(&unit(nr, x));
                for y in 0..np {
                    let comm = cl.odot(&ax, &cl.generator(y)).unwrap().minus(&cl.odot(&cl.generator(y), &ax).unwrap());
                    assert_eq!(comm, cl.vector(&pair.r_action_on_p(xg, &unit(np, y))), "{name}");
                }
                for z in 0..nr {
                    let bracket = pair.r_algebra().bracket(&unit(nr, x), &unit(nr, z));
                    let lhs = d.alpha(&bracket);
                    let adj = d.l(&unit(nr, x))(&d.algebra().from_w(&d.alpha(&unit(nr, z))));
                    assert_eq!(d.algebra().from_w(&lhs), adj, "{name}");
                    let az = d.alpha(&unit(nr, z));
                    let comm = cl.odot(&ax, &az).unwrap().minus(&cl.odot(&az, &ax).unwrap());
                    assert_eq!(lhs, comm, "{name}");
                }
            }
        }
    }

    #[test]
    fn xi_values_and_multiplicativity() {
        let d = sl2(2);
        assert_eq!(d.xi(&Poly::one(1)).unwrap(), d.algebra().one());
        let h = Poly::generator(1, 0);
        assert_eq!(d.format(&d.xi(&h).unwrap()), "h⊗1 + 2 1⊗e∧f");
        let h2 = h.sym_mul(&h);
        let xh = d.xi(&h).unwrap();
        assert_eq!(d.xi(&h2).unwrap(), d.algebra().mul(&xh, &xh).unwrap());
        let slice = d.algebra().slice(2);
        let images: Vec<_> = [Poly::one(1), h.clone(), h2].iter().map(|u| slice.to_vec(&d.xi(u).unwrap())).collect();
        assert_eq!(Subspace::from_owned(slice.len(), images).unwrap().dim(), 3);

        let diag = DiracAlgebra::new(&fixtures::diagonal(), 2).unwrap();
        let ur = diag.uenv_r();
        for i in 0..3 {
            for j in 0..3 {
                let (a, b) = (ur.generator(i), ur.generator(j));
                let lhs = diag.xi(&ur.mul(&a, &b).unwrap()).unwrap();
                let rhs = diag.algebra().mul(&diag.xi(&a).unwrap(), &diag.xi(&b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn xi_implements_the_adjoint_action() {
        for name in ["sl2-cartan", "sl2xsl2-diagonal", "sl3-cartan"] {
            let pair = fixtures::pair(name);
            let d = DiracAlgebra::new(&pair, 2).unwrap();
            let slice = d.algebra().slice(1);
            for x in 0..pair.dim(Part::R) {
                let x = unit(pair.dim(Part::R), x);
                let xi = d.xi_vector(&x);
                for a in slice.basis() {
                    let comm = d.algebra().mul(&xi, &a).unwrap().minus(&d.algebra().mul(&a, &xi).unwrap());
                    assert_eq!(d.l(&x)(&a), comm, "{name}");
                }
            }
        }
    }

    #[test]
    fn differential_identities() {
        let d = sl2(3);
        let h = Poly::generator(1, 0);
        assert!(d.d(&d.xi(&h).unwrap()).unwrap().is_zero());
        assert!(d.d(&d.algebra().from_u(&omega(&d))).unwrap().is_zero());
        let ce = d.algebra().c_vector(&unit(2, 0));
        let dce = d.d(&ce).unwrap();
        assert_eq!(d.format(&dce), "e⊗1");
        for x in d.invariant_basis(1, None) {
            let dx = d.d(&x).unwrap();
            assert!(d.d(&dx).unwrap().is_zero());
        }
        for z in d.center_r(2) {
            assert!(d.d(&d.xi(&z).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn kernel_decomposition_sl2() {
        let d = sl2(4);
        let report = verify_kernel_decomposition(&d, 2).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.xi_dim, 3);
    }

    #[test]
    fn kernel_decomposition_when_r_is_g() {
        let d = DiracAlgebra::new(&fixtures::pair("sl2-full"), 4).unwrap();
        let report = verify_kernel_decomposition(&d, 2).unwrap();
        assert!(report.holds(), "{report:?}");
        assert_eq!(report.image_dim, 0);
        assert_eq!(report.kernel_dim, report.xi_dim);
    }

    #[test]
    fn eta_for_the_sl2_pair() {
        let d = sl2(3);
        let om = omega(&d);
        let eta = eta_duflo(d.pair(), &om).unwrap();
        let h = Poly::generator(1, 0);
        let want = h.sym_mul(&h).scale(&Scalar::frac(1, 2)).minus(&Poly::constant(1, Scalar::frac(1, 2)));
        assert_eq!(eta, want);
        assert_eq!(eta_duflo(d.pair(), &Poly::one(3)).unwrap(), Poly::one(1));

        let hom = solve_homotopy(&d, &om, 1).unwrap();
        assert!(hom.eta_unique);
        assert_eq!(hom.eta, eta);
        assert!(homotopy_residual(&d, &om, &hom).unwrap().is_zero());
        assert_eq!(hom.a.parity(), Some(true));

        let (l, r) = diagram_sides(d.pair(), &om, &eta).unwrap();
        assert_eq!(l, r);
    }

    #[test]
    fn homotopy_for_one_is_zero() {
        let d = sl2(2);
        let hom = solve_homotopy(&d, &Poly::one(3), 1).unwrap();
        assert_eq!(hom.eta, Poly::one(1));
        assert!(hom.a.is_zero() || homotopy_residual(&d, &Poly::one(3), &hom).unwrap().is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let d = sl2(2);
        assert!(verify_kernel_decomposition(&d, 2).is_err());
        let _ = Mixed::zero(3, 2);
    }
}

//! Acceptance gate. Each test prints one `criterion N: PASS|FAIL` line.

use std::time::{Duration, Instant};

use cubic_dirac::cli::clifford_checks;
use cubic_dirac::cli::Status;
use cubic_dirac::cliff::{clifford, Clifford, ExteriorElement};
use cubic_dirac::dirac::{
    diagram_sides, eta_duflo, homotopy_residual, solve_homotopy, verify_kernel_decomposition, DiracAlgebra,
};
use cubic_dirac::exactlin::{SparseVec, Subspace};
use cubic_dirac::fixtures;
use cubic_dirac::liealg::{unit, LieAlgebra, Part, QuadraticPair, QuadraticSpace};
use cubic_dirac::ncweil::{FourTermSigns, Mixed, NcWeil, TensorSquare, Weil};
use cubic_dirac::specrep::{verify_central_character, DiracMatrix, GModule, SpinorModule};
use cubic_dirac::uenv::{casimir, Poly};
use cubic_dirac::{Error, Field, Scalar};

/// Runs `check`, prints the criterion line and asserts both the outcome and the time bound.
fn criterion(n: u32, title: &str, bound: Option<Duration>, check: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed <= b);
    let status = if outcome.is_ok() && in_time { "PASS" } else { "FAIL" };
    let limit = bound.map_or(String::new(), |b| format!(", bound {} s", b.as_secs()));
    let why = match &outcome {
        Err(e) => format!(": {e}"),
        Ok(()) if !in_time => ": over time".to_string(),
        Ok(()) => String::new(),
    };
    println!("criterion {n}: {status} {title} ({} ms{limit}){why}", elapsed.as_millis());
    assert!(outcome.is_ok() && in_time, "criterion {n} failed{why}");
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn same_space(a: &Subspace, b: &Subspace) -> bool {
    a.is_subspace_of(b).unwrap() && b.is_subspace_of(a).unwrap()
}

fn omega(d: &DiracAlgebra) -> Poly {
    let pair = d.pair();
    casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G)).unwrap()
}

fn sl2_lie() -> (LieAlgebra, cubic_dirac::liealg::InvariantForm) {
    let pair = fixtures::sl2();
    (pair.g().clone(), pair.form().clone())
}

/// `[L_a,i_b] = i_[a,b]`, `[i_a,d] = L_a`, `[L_a,L_b] = L_[a,b]` on every element of `xs`.
fn cartan_relations(
    lie: &LieAlgebra,
    xs: &[Mixed],
    d: impl Fn(&Mixed) -> Mixed,
    i: impl Fn(&[Scalar], &Mixed) -> Mixed,
    l: impl Fn(&[Scalar], &Mixed) -> Mixed,
) -> Result<(), String> {
    let n = lie.dim();
    for x in xs {
        let dx = d(x);
        for a in 0..n {
            let ua = unit(n, a);
            ensure(i(&ua, &dx).plus(&d(&i(&ua, x))) == l(&ua, x), || format!("[i_{a}, d]"))?;
            for b in 0..n {
                let ub = unit(n, b);
                let ab = lie.bracket(&ua, &ub);
                ensure(l(&ua, &i(&ub, x)).minus(&i(&ub, &l(&ua, x))) == i(&ab, x), || format!("[L_{a}, i_{b}]"))?;
                ensure(l(&ua, &l(&ub, x)).minus(&l(&ub, &l(&ua, x))) == l(&ab, x), || format!("[L_{a}, L_{b}]"))?;
            }
        }
    }
    Ok(())
}

fn clifford_suite(cl: &Clifford) -> Result<(), String> {
    for rec in clifford_checks("cl", cl).map_err(|e| e.to_string())? {
        ensure(rec.status == Status::Pass, || format!("{} {:?}: {}", rec.name, rec.status, rec.detail))?;
    }
    Ok(())
}

#[test]
fn criterion_01_clifford_relations() {
    criterion(1, "Clifford relations and associativity", Some(Duration::from_secs(10)), || {
        let mut checked = 0;
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            for part in [Part::P, Part::G] {
                if pair.dim(part) <= 6 {
                    clifford_suite(&clifford(&pair, part)).map_err(|e| format!("{name} {part:?}: {e}"))?;
                    checked += 1;
                }
            }
        }
        ensure(checked >= 15, || format!("only {checked} spaces checked"))
    });
}

#[test]
fn criterion_02_weil_relations() {
    criterion(2, "ĝ*-relations on W(sl2) and 𝒲(sl2), cap 3", Some(Duration::from_secs(30)), || {
        let (g, b) = sl2_lie();
        let w = Weil::new(g.clone(), &b).map_err(|e| e.to_string())?;
        let xs = w.slice(2).basis();
        cartan_relations(&g, &xs, |x| w.d(x), |a, x| w.i(a, x), |a, x| w.l(a, x)).map_err(|e| format!("W: {e}"))?;
        let nc = NcWeil::new(g.clone(), b, 3).map_err(|e| e.to_string())?;
        let xs = nc.algebra().slice(2).basis();
        cartan_relations(&g, &xs, |x| nc.d(x).unwrap(), |a, x| nc.i(a, x), |a, x| nc.l(a, x))
            .map_err(|e| format!("𝒲: {e}"))
    });
}

#[test]
fn criterion_03_differential_consistency() {
    criterion(3, "ad 𝒟 equals the four-term formula; d² = 0 at cap 4", Some(Duration::from_secs(60)), || {
        let (g, b) = sl2_lie();
        let nc = NcWeil::new(g.clone(), b.clone(), 3).unwrap();
        for x in nc.algebra().slice(2).basis() {
            let explicit = nc.explicit_differential(&x, FourTermSigns::AD_DIRAC).unwrap();
            ensure(nc.d(&x).unwrap() == explicit, || format!("formula differs on {}", nc.algebra().format(&x)))?;
        }
        let nc = NcWeil::new(g, b, 4).unwrap();
        for x in nc.algebra().slice(2).basis() {
            ensure(nc.d(&nc.d(&x).unwrap()).unwrap().is_zero(), || format!("d² ≠ 0 on {}", nc.algebra().format(&x)))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_04_basic_subspace() {
    criterion(4, "basic subspace of 𝒲(sl2)≤2 equals (U(g)≤2⊗Λ(p))^h", None, || {
        let pair = fixtures::sl2();
        let (g, b) = sl2_lie();
        let w = NcWeil::new(g, b, 3).unwrap();
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
        let invariants = point.invariant_basis(2, None);
        let vecs: Vec<SparseVec> = invariants.iter().map(|x| slice.to_vec(&embed(x))).collect();
        let built = Subspace::from_owned(slice.len(), vecs).unwrap();
        ensure(basic.dim() == built.dim(), || format!("dimensions {} vs {}", basic.dim(), built.dim()))?;
        ensure(same_space(&basic, &built), || "subspaces differ".into())?;
        for x in &invariants {
            ensure(w.d(&embed(x)).unwrap() == embed(&point.d(x).unwrap()), || "differentials differ".into())?;
        }
        Ok(())
    });
}

#[test]
fn criterion_05_flip_sign() {
    criterion(5, "flip sign on horizontal tensors and 𝒜 = hor", Some(Duration::from_secs(10)), || {
        let (g, b) = sl2_lie();
        let sq = TensorSquare::new(Weil::new(g, &b).unwrap().clifford().clone());
        let mut total = 0;
        for k in 0..=6 {
            let hor = sq.horizontal(Some(k));
            let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
            for v in hor.basis() {
                ensure(sq.flip(v) == v.scale(&sign), || format!("flip sign in degree {k}"))?;
            }
            total += hor.dim();
        }
        let hor = sq.horizontal(None);
        ensure(hor.dim() == total, || "horizontal part is not graded".into())?;
        ensure(same_space(&hor, &sq.delta_subalgebra()), || "𝒜 ≠ hor".into())
    });
}

#[test]
fn criterion_06_kernel_decomposition() {
    criterion(6, "Ker d = ξ(Z(r)) ⊕ Im d, windowed at N = 2", Some(Duration::from_secs(120)), || {
        for pair in [fixtures::sl2(), fixtures::diagonal()] {
            let d = DiracAlgebra::new(&pair, 4).unwrap();
            let k = verify_kernel_decomposition(&d, 2).map_err(|e| e.to_string())?;
            ensure(k.holds(), || format!("{k:?}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_two_routes_to_eta() {
    criterion(
        7,
        "η_R(Ω) by Duflo equals the homotopy solution; diagram commutes",
        Some(Duration::from_secs(120)),
        || {
            for (pair, m) in [(fixtures::sl2(), 1), (fixtures::diagonal(), 2)] {
                let d = DiracAlgebra::new(&pair, m + 1).unwrap();
                let om = omega(&d);
                let eta = eta_duflo(&pair, &om).unwrap();
                let hom = solve_homotopy(&d, &om, m).map_err(|e| e.to_string())?;
                ensure(hom.eta == eta && hom.eta_unique, || "η differs between routes".into())?;
                ensure(homotopy_residual(&d, &om, &hom).unwrap().is_zero(), || "nonzero residual".into())?;
                for z in [Poly::one(pair.g().dim()), om.clone()] {
                    let eta_z = eta_duflo(&pair, &z).unwrap();
                    let (left, right) = diagram_sides(&pair, &z, &eta_z).unwrap();
                    ensure(left == right, || "diagram does not commute".into())?;
                }
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_08_central_characters() {
    criterion(8, "χ(Ω) on H_D of V(n), n = 0..4", Some(Duration::from_secs(60)), || {
        let d = DiracAlgebra::new(&fixtures::sl2(), 2).unwrap();
        let om = omega(&d);
        let eta = eta_duflo(d.pair(), &om).unwrap();
        for n in 0..=4i64 {
            let dm = DiracMatrix::new(&d, &GModule::sl2_irrep(n as usize), Field::Rational).unwrap();
            let c = verify_central_character(&dm, &om, &eta).map_err(|e| e.to_string())?;
            ensure(c.cohomology_dim == 2, || format!("V({n}): dim H_D = {}", c.cohomology_dim))?;
            ensure(c.chi == Scalar::frac(n * n + 2 * n, 2), || format!("V({n}): χ = {}", c.chi))?;
            ensure(c.holds, || format!("V({n}): ξ(η) ≠ χ on H_D"))?;
        }
        Ok(())
    });
}

fn gram(rows: &[&[i64]]) -> QuadraticSpace {
    QuadraticSpace::from_gram(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()).unwrap()
}

#[test]
fn criterion_09_spinors() {
    criterion(9, "spinor relations for dim p ≤ 4 and [𝒟^p_V, ξ] = 0", None, || {
        let synthetic = [
            (gram(&[]), Field::Rational),
            (gram(&[&[2]]), Field::Rational),
            (gram(&[&[1, 0], &[0, 1]]), Field::Gaussian),
            (gram(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 8]]), Field::Rational),
            (gram(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 2, 1], &[0, 0, 1, -4]]), Field::Rational),
        ];
        for (space, field) in &synthetic {
            let s = SpinorModule::new(space, *field).map_err(|e| e.to_string())?;
            ensure(s.check_relations(), || format!("relations fail for dim {}", space.dim()))?;
            ensure(s.dim() == 1 << (space.dim() / 2), || format!("spinor dim {}", s.dim()))?;
        }
        let needs_qi =
            matches!(SpinorModule::new(&synthetic[2].0, Field::Rational), Err(Error::FieldExtensionRequired(_)));
        ensure(needs_qi, || "the Gaussian case was not required".into())?;
        for name in fixtures::VALID {
            let pair = fixtures::pair(name);
            let field = fixtures::document(name).settings.field;
            let d = DiracAlgebra::new(&pair, 1).unwrap();
            for module in [GModule::trivial(pair.g()), GModule::adjoint(pair.g())] {
                let dm = DiracMatrix::new(&d, &module, field).map_err(|e| format!("{name}: {e}"))?;
                ensure(dm.commutes_with_xi(), || format!("{name} {}", module.name()))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_negative_controls() {
    criterion(10, "corrupted Jacobi, degenerate B|r and a wrong Exp sign are caught", None, || {
        let broken = fixtures::document("sl2-broken-jacobi");
        let jacobi = broken.lie_algebra_unchecked().unwrap().check_jacobi();
        ensure(matches!(jacobi, Err(Error::JacobiViolation(..))), || "broken Jacobi accepted".into())?;
        ensure(broken.to_pair().is_err(), || "broken pair accepted".into())?;
        let isotropic = fixtures::document("sl2-isotropic").to_pair();
        ensure(matches!(isotropic, Err(Error::DegenerateRestriction)), || "isotropic r accepted".into())?;

        let pair = fixtures::sl2();
        let wrong = Clifford::with_exp_coefficient(pair.space(Part::G).clone(), Scalar::frac(1, 2));
        let relations_fail = clifford_suite(&wrong).is_err();
        let (g, b) = sl2_lie();
        let nc = NcWeil::new(g, b, 3).unwrap().with_exp_coefficient(Scalar::frac(1, 2));
        let formula_fails = nc
            .algebra()
            .slice(2)
            .basis()
            .iter()
            .any(|x| nc.d(x).unwrap() != nc.explicit_differential(x, FourTermSigns::AD_DIRAC).unwrap());
        ensure(relations_fail || formula_fails, || "wrong Exp sign undetected".into())
    });
}

fn point_case_pipeline(pair: &QuadraticPair) -> Result<(), String> {
    let d = DiracAlgebra::new(pair, 3).unwrap();
    ensure(verify_kernel_decomposition(&d, 1).map_err(|e| e.to_string())?.holds(), || "decomposition".into())?;
    let om = omega(&d);
    let hom = solve_homotopy(&d, &om, 1).map_err(|e| e.to_string())?;
    ensure(homotopy_residual(&d, &om, &hom).unwrap().is_zero(), || "homotopy".into())?;
    let dm = DiracMatrix::new(&d, &GModule::sl2_irrep(1), Field::Rational).unwrap();
    ensure(verify_central_character(&dm, &om, &hom.eta).map_err(|e| e.to_string())?.holds, || "character".into())
}

#[test]
fn criterion_11_substitution() {
    criterion(11, "global statements substituted by the point-case checks of criteria 4, 6, 7, 8", None, || {
        point_case_pipeline(&fixtures::sl2())
    });
}

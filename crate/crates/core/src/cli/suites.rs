use std::collections::BTreeMap;

use clap::ValueEnum;

use super::report::CheckRecord;
use crate::cliff::{Clifford, ExteriorElement};
use crate::dirac::{
    diagram_sides, eta_duflo, homotopy_residual, solve_homotopy, verify_kernel_decomposition, DiracAlgebra,
};
use crate::error::{Error, Result};
use crate::liealg::{unit, LieAlgebra, Part, QuadraticPair};
use crate::ncweil::{FourTermSigns, Mixed, MixedSlice, NcWeil, Weil};
use crate::scalar::{Field, Scalar};
use crate::specrep::{DiracMatrix, GModule, SpinorModule};
use crate::uenv::{casimir, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Weil,
    Dirac,
    Theorem33,
    Theorem34,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Weil => "weil",
            Suite::Dirac => "dirac",
            Suite::Theorem33 => "theorem33",
            Suite::Theorem34 => "theorem34",
            Suite::All => "all",
        }
    }
}

/// Algebras of at most this dimension get exhaustive probes.
const SMALL: usize = 4;
/// Largest dimension for the exhaustive ⊙-associativity check.
const ASSOCIATIVITY_DIM: usize = 6;

pub fn run(pair: &QuadraticPair, suite: Suite, cap: usize, field: Field) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    if matches!(suite, Suite::Weil | Suite::All) {
        out.extend(weil(pair, cap)?);
    }
    if matches!(suite, Suite::Dirac | Suite::All) {
        out.extend(dirac(pair, cap, field)?);
    }
    if matches!(suite, Suite::Theorem33 | Suite::All) {
        out.push(theorem33(pair, cap)?);
    }
    if matches!(suite, Suite::Theorem34 | Suite::All) {
        out.extend(theorem34(pair, cap)?);
    }
    Ok(out)
}

/// Basis tensors of `slice`; for large Clifford slots only the generators and their pairwise
/// products, which suffices for identities between derivations.
fn probes(slice: &MixedSlice, nw: usize) -> Vec<Mixed> {
    (0..slice.len())
        .filter(|&i| {
            let (m, mask) = &slice.keys()[i];
            nw <= SMALL || m.degree() + mask.count_ones() as usize <= 2
        })
        .map(|i| slice.basis_element(i))
        .collect()
}

/// `[L_a,i_b] = i_[a,b]`, `[i_a,d] = L_a`, `[L_a,L_b] = L_[a,b]` on `xs`; the first failure.
fn cartan_relations(
    lie: &LieAlgebra,
    xs: &[Mixed],
    d: impl Fn(&Mixed) -> Result<Mixed>,
    i: impl Fn(&[Scalar], &Mixed) -> Mixed,
    l: impl Fn(&[Scalar], &Mixed) -> Mixed,
) -> Result<Option<String>> {
    let n = lie.dim();
    for x in xs {
        let dx = d(x)?;
        for a in 0..n {
            let ua = unit(n, a);
            if i(&ua, &dx).plus(&d(&i(&ua, x))?) != l(&ua, x) {
                return Ok(Some(format!("[i_{}, d]", lie.label(a))));
            }
            for b in 0..n {
                let ub = unit(n, b);
                let ab = lie.bracket(&ua, &ub);
                if l(&ua, &i(&ub, x)).minus(&i(&ub, &l(&ua, x))) != i(&ab, x) {
                    return Ok(Some(format!("[L_{}, i_{}]", lie.label(a), lie.label(b))));
                }
                if l(&ua, &l(&ub, x)).minus(&l(&ub, &l(&ua, x))) != l(&ab, x) {
                    return Ok(Some(format!("[L_{}, L_{}]", lie.label(a), lie.label(b))));
                }
            }
        }
    }
    Ok(None)
}

fn relation_record(name: &str, probes: usize, failure: Option<String>) -> CheckRecord {
    let rec = CheckRecord::new(name, failure.is_none()).witness("probes", probes);
    match failure {
        Some(f) => rec.detail(format!("{f} fails")),
        None => rec,
    }
}

/// `x⊙y + y⊙x = ⟨x,y⟩` on generators and, for small `dim`, associativity on basis triples.
pub fn clifford_checks(name: &str, cl: &Clifford) -> Result<Vec<CheckRecord>> {
    let n = cl.dim();
    let mut relation = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let (x, y) = (cl.generator(i), cl.generator(j));
            if cl.odot(&x, &y)?.plus(&cl.odot(&y, &x)?) != cl.scalar(cl.space().gram()[i][j].clone()) {
                relation = Some(format!("c_{} c_{}", cl.labels()[i], cl.labels()[j]));
                break 'outer;
            }
        }
    }
    let mut out = vec![relation_record(&format!("{name}.relations"), n * n, relation)];
    if n <= ASSOCIATIVITY_DIM {
        let size = 1usize << n;
        let table = product_table(cl)?;
        let mut bad = None;
        'assoc: for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    let left = combine(&table[a][b], |m| &table[m][c]);
                    let right = combine(&table[b][c], |m| &table[a][m]);
                    if left != right {
                        bad = Some(format!("masks {a:#b}, {b:#b}, {c:#b}"));
                        break 'assoc;
                    }
                }
            }
        }
        out.push(relation_record(&format!("{name}.associativity"), size * size * size, bad));
    } else {
        out.push(CheckRecord::skipped(format!("{name}.associativity"), format!("dimension {n} > {ASSOCIATIVITY_DIM}")));
    }
    Ok(out)
}

type Terms = Vec<(usize, Scalar)>;

/// `table[a][b]` holds the terms of `a ⊙ b` for basis monomials.
fn product_table(cl: &Clifford) -> Result<Vec<Vec<Terms>>> {
    let n = cl.dim();
    let mono = |m: usize| ExteriorElement::monomial(n, m as u64, Scalar::one());
    (0..1usize << n)
        .map(|a| {
            (0..1usize << n)
                .map(|b| {
                    Ok(cl.odot(&mono(a), &mono(b))?.terms().iter().map(|(m, c)| (*m as usize, c.clone())).collect())
                })
                .collect()
        })
        .collect()
}

/// `Σ c_m · f(m)` over the terms of `outer`.
fn combine<'a>(outer: &[(usize, Scalar)], f: impl Fn(usize) -> &'a Terms) -> BTreeMap<usize, Scalar> {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (m, c) in outer {
        for (k, d) in f(*m) {
            *acc.entry(*k).or_insert_with(Scalar::zero) += &(c * d);
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

fn weil(pair: &QuadraticPair, cap: usize) -> Result<Vec<CheckRecord>> {
    let g = pair.g();
    let n = g.dim();
    let mut out = Vec::new();
    out.extend(clifford_checks("cliff.g", &crate::cliff::clifford(pair, Part::G))?);
    out.extend(clifford_checks("cliff.p", &crate::cliff::clifford(pair, Part::P))?);

    let w = Weil::new(g.clone(), pair.form())?;
    let xs = probes(&w.slice(if n <= SMALL { 2 } else { 1 }), n);
    let failure = cartan_relations(g, &xs, |x| Ok(w.d(x)), |a, x| w.i(a, x), |a, x| w.l(a, x))?;
    out.push(relation_record("weil.commutative.relations", xs.len(), failure));
    let squares = xs.iter().position(|x| !w.d(&w.d(x)).is_zero());
    out.push(relation_record("weil.commutative.d_squared", xs.len(), squares.map(|k| w.format(&xs[k]))));

    if cap < 2 {
        out.push(CheckRecord::skipped("weil.noncommutative", "needs cap ≥ 2"));
        return Ok(out);
    }
    let nc = NcWeil::new(g.clone(), pair.form().clone(), cap)?;
    let alg = nc.algebra();
    let xs = probes(&alg.slice(cap - 1), n);
    let failure = cartan_relations(g, &xs, |x| nc.d(x), |a, x| nc.i(a, x), |a, x| nc.l(a, x))?;
    out.push(relation_record("weil.noncommutative.relations", xs.len(), failure));

    let mut formula = None;
    let mut printed_agrees = true;
    for x in &xs {
        let dx = nc.d(x)?;
        if formula.is_none() && dx != nc.explicit_differential(x, FourTermSigns::AD_DIRAC)? {
            formula = Some(alg.format(x));
        }
        if printed_agrees && dx != nc.explicit_differential(x, FourTermSigns::PRINTED)? {
            printed_agrees = false;
        }
    }
    out.push(
        relation_record("weil.noncommutative.explicit_formula", xs.len(), formula)
            .witness("signs", "(+,+,+,+)")
            .witness("signs (-,-,+,+) agree", printed_agrees),
    );

    if cap >= 3 {
        let xs = probes(&alg.slice(cap - 2), n);
        let mut bad = None;
        for x in &xs {
            if !nc.d(&nc.d(x)?)?.is_zero() {
                bad = Some(alg.format(x));
                break;
            }
        }
        out.push(relation_record("weil.noncommutative.d_squared", xs.len(), bad));
    } else {
        out.push(CheckRecord::skipped("weil.noncommutative.d_squared", "needs cap ≥ 3"));
    }

    let invariant = (0..n).all(|a| nc.l(&unit(n, a), nc.dirac()).is_zero());
    out.push(
        CheckRecord::new("weil.noncommutative.dirac_invariant", invariant).witness("dirac", alg.format(nc.dirac())),
    );
    if cap >= 3 {
        let omega = casimir(alg.uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G))?;
        let closed = nc.d(&alg.from_u(&omega))?.is_zero();
        out.push(
            CheckRecord::new("weil.noncommutative.casimir_closed", closed)
                .witness("omega", omega.format_with(alg.uenv().labels())),
        );
    } else {
        out.push(CheckRecord::skipped("weil.noncommutative.casimir_closed", "needs cap ≥ 3"));
    }
    Ok(out)
}

/// `L_x 𝒟^p = 0` and `𝒟^p` odd.
pub fn cubic_invariance(d: &DiracAlgebra) -> CheckRecord {
    let nr = d.pair().dim(Part::R);
    let invariant = (0..nr).all(|x| d.l(&unit(nr, x))(d.dirac()).is_zero());
    let odd = d.dirac().is_zero() || d.dirac().parity() == Some(true);
    CheckRecord::new("dirac.invariant", invariant && odd)
}

fn dirac(pair: &QuadraticPair, cap: usize, field: Field) -> Result<Vec<CheckRecord>> {
    let d = DiracAlgebra::new(pair, cap.max(3))?;
    let alg = d.algebra();
    let cl = alg.clifford();
    let (nr, np) = (pair.dim(Part::R), pair.dim(Part::P));
    let mut out = vec![cubic_invariance(&d)];

    let mut alpha_bad = None;
    for x in 0..nr {
        let ax = d.alpha(&unit(nr, x));
        for y in 0..np {
            let comm = cl.odot(&ax, &cl.generator(y))?.minus(&cl.odot(&cl.generator(y), &ax)?);
            if comm != cl.vector(&pair.r_action_on_p(&pair.basis(Part::R)[x], &unit(np, y))) {
                alpha_bad = Some(format!("[α({}), c_{}]", pair.space(Part::R).labels()[x], cl.labels()[y]));
            }
        }
    }
    out.push(relation_record("dirac.alpha", nr * np, alpha_bad));

    let slice = alg.slice(1);
    let xs = probes(&slice, np);
    let mut xi_bad = None;
    for x in 0..nr {
        let ux = unit(nr, x);
        let xi = d.xi_vector(&ux);
        for a in &xs {
            if d.l(&ux)(a) != alg.mul(&xi, a)?.minus(&alg.mul(a, &xi)?) {
                xi_bad = Some(format!("ξ({})", pair.space(Part::R).labels()[x]));
            }
        }
    }
    out.push(relation_record("dirac.xi_adjoint", nr * xs.len(), xi_bad));

    let mut closed = Vec::new();
    for z in d.center_r(1) {
        closed.push(d.d(&d.xi(&z)?)?.is_zero());
    }
    let omega = casimir(alg.uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G))?;
    closed.push(d.d(&alg.from_u(&omega))?.is_zero());
    out.push(CheckRecord::new("dirac.d_closed", closed.iter().all(|&c| c)).witness("elements", closed.len()));

    let invariants = d.invariant_basis(cap.max(3) - 2, None);
    let mut sq_bad = None;
    for x in &invariants {
        if !d.d(&d.d(x)?)?.is_zero() {
            sq_bad = Some(d.format(x));
            break;
        }
    }
    out.push(relation_record("dirac.d_squared", invariants.len(), sq_bad));

    match SpinorModule::new(pair.space(Part::P), field) {
        Ok(s) => {
            out.push(CheckRecord::new("spinor.relations", s.check_relations()).witness("dim", s.dim()));
            for module in [GModule::trivial(pair.g()), GModule::adjoint(pair.g())] {
                let dm = DiracMatrix::with_spinors(&d, &module, s.clone())?;
                let rank_nullity = dm.kernel().dim() + dm.image().dim() == dm.dim();
                out.push(
                    CheckRecord::new(
                        format!("spinor.{}.commutes_with_xi", module.name()),
                        dm.commutes_with_xi() && rank_nullity,
                    )
                    .witness("kernel", dm.kernel().dim())
                    .witness("rank", dm.image().dim()),
                );
            }
        }
        Err(e @ Error::FieldExtensionRequired(_)) => {
            out.push(CheckRecord::skipped("spinor", format!("{e}; rerun with --field Qi")))
        }
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn theorem33(pair: &QuadraticPair, cap: usize) -> Result<CheckRecord> {
    if cap < 3 {
        return Ok(CheckRecord::skipped("theorem33.kernel_decomposition", "needs cap ≥ 3"));
    }
    let n = cap - 2;
    let d = DiracAlgebra::new(pair, cap)?;
    let k = verify_kernel_decomposition(&d, n)?;
    Ok(CheckRecord::new("theorem33.kernel_decomposition", k.holds())
        .witness("N", n)
        .witness("invariant_dim", k.invariant_dim)
        .witness("kernel_dim", k.kernel_dim)
        .witness("image_dim", k.image_dim)
        .witness("xi_dim", k.xi_dim)
        .witness("xi_in_kernel", k.xi_in_kernel)
        .witness("image_in_kernel", k.image_in_kernel)
        .witness("xi_meets_image_trivially", k.xi_meets_image_trivially)
        .witness("window_spanned", k.window_spanned))
}

fn theorem34(pair: &QuadraticPair, cap: usize) -> Result<Vec<CheckRecord>> {
    let cap = cap.max(2);
    let m = cap - 1;
    let d = DiracAlgebra::new(pair, cap)?;
    let r_labels = pair.space(Part::R).labels().to_vec();
    let omega = casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G))?;
    let mut out = Vec::new();
    for (tag, z) in [("one", Poly::one(pair.g().dim())), ("casimir", omega)] {
        let eta = eta_duflo(pair, &z)?;
        let (left, right) = diagram_sides(pair, &z, &eta)?;
        out.push(
            CheckRecord::new(format!("theorem34.{tag}.diagram"), left == right)
                .witness("eta_R", eta.format_with(&r_labels)),
        );
        let name = format!("theorem34.{tag}.homotopy");
        match solve_homotopy(&d, &z, m) {
            Ok(h) => {
                let residual = homotopy_residual(&d, &z, &h)?;
                let ok = residual.is_zero() && h.eta == eta && h.eta_unique;
                out.push(
                    CheckRecord::new(name, ok)
                        .witness("M", m)
                        .witness("eta", h.eta.format_with(&r_labels))
                        .witness("eta_unique", h.eta_unique)
                        .witness("a_z", d.format(&h.a))
                        .witness("residual", d.format(&residual)),
                );
            }
            Err(Error::NoSolution(why)) => out.push(CheckRecord::new(name, false).detail(why).witness("M", m)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

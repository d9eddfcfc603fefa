//! PBW arithmetic in U(sl2), the Casimir element and the Duflo map in low degree.

use cubic_dirac::fixtures;
use cubic_dirac::liealg::Part;
use cubic_dirac::uenv::{casimir, casimir_symbol, duflo, symmetrize, Uenv};

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let u = Uenv::new(pair.g().clone(), 3);
    let labels = u.labels().to_vec();
    let (h, e, f) = (u.generator(0), u.generator(1), u.generator(2));
    println!("e·f = {}", u.mul(&e, &f)?.format_with(&labels));
    println!("f·e = {}", u.mul(&f, &e)?.format_with(&labels));
    println!("[e, f] = {}", u.commutator(&e, &f)?.format_with(&labels));
    println!("f·h·e = {}", u.mul(&u.mul(&f, &h)?, &e)?.format_with(&labels));

    let dual = pair.dual_basis(Part::G);
    let omega = casimir(&u, pair.basis(Part::G), &dual)?;
    println!("Ω = {}", omega.format_with(&labels));
    for x in [&h, &e, &f] {
        assert!(u.commutator(x, &omega)?.is_zero());
    }
    let symbol = casimir_symbol(pair.basis(Part::G), &dual);
    println!("sym(Ω symbol) = {}", symmetrize(&u, &symbol)?.format_with(&labels));
    println!("duflo(Ω symbol) = {}", duflo(&u, &symbol)?.format_with(&labels));
    Ok(())
}

//! The maps F: W(r) → W(g) and 𝓕: 𝒲(r) → 𝒲(g) for the sl2 pair.

use cubic_dirac::dirac::DiracAlgebra;
use cubic_dirac::fixtures;
use cubic_dirac::ncweil::InductionMaps;

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let point = DiracAlgebra::new(&pair, 2)?;
    let maps = InductionMaps::new(&pair, point.alphas(), 2)?;
    let (wr, wg) = (maps.weil_r(), maps.weil_g());
    let s_h = wr.s(0);
    let e_h = wr.e(0);
    println!("F(s_h) = {}", wg.format(&maps.classical(&s_h)));
    println!("F(e_h) = {}", wg.format(&maps.classical(&e_h)));
    println!("F(d e_h) = {}", wg.format(&maps.classical(&wr.d(&e_h))));
    println!("d F(e_h) = {}", wg.format(&wg.d(&maps.classical(&e_h))));

    let (nr, ng) = (maps.nc_r(), maps.nc_g());
    let u_h = nr.u(0);
    println!("𝓕(h⊗1) = {}", ng.algebra().format(&maps.quantum(&u_h)?));
    println!("𝓕(d c_h) = {}", ng.algebra().format(&maps.quantum(&nr.d(&nr.c(0))?)?));
    println!("d 𝓕(c_h) = {}", ng.algebra().format(&ng.d(&maps.quantum(&nr.c(0))?)?));
    Ok(())
}

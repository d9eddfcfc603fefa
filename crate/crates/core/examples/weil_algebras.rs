//! The Weil algebra W(sl2) and the noncommutative Weil algebra 𝒲(sl2) with d = ad 𝒟.

use cubic_dirac::fixtures;
use cubic_dirac::liealg::unit;
use cubic_dirac::ncweil::{FourTermSigns, NcWeil, Weil};

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let w = Weil::new(pair.g().clone(), pair.form())?;
    for j in 0..3 {
        println!("W:  d e_{j} = {}", w.format(&w.d(&w.e(j))));
        println!("W:  d s_{j} = {}", w.format(&w.d(&w.s(j))));
    }

    let nc = NcWeil::new(pair.g().clone(), pair.form().clone(), 3)?;
    let alg = nc.algebra();
    println!("𝒟 = {}", alg.format(nc.dirac()));
    for j in 0..3 {
        println!("𝒲:  d c_{j} = {}", alg.format(&nc.d(&nc.c(j))?));
    }
    let x = alg.mul(&nc.u(1), &nc.c(2))?;
    println!("𝒲:  d(u_e c_f) = {}", alg.format(&nc.d(&x)?));
    assert_eq!(nc.d(&x)?, nc.explicit_differential(&x, FourTermSigns::AD_DIRAC)?);
    println!(
        "i_h d(c_e) + d i_h(c_e) = {}",
        alg.format(&nc.i(&unit(3, 0), &nc.d(&nc.c(1))?).plus(&nc.d(&nc.i(&unit(3, 0), &nc.c(1)))?))
    );
    Ok(())
}

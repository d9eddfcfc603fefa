//! Commutative and noncommutative Cartan models with B = Λ(g) carrying the Koszul differential.

use cubic_dirac::fixtures;
use cubic_dirac::ncweil::{BDatum, BSlice, CartanModel};
use cubic_dirac::uenv::Uenv;

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let (g, b) = (pair.g().clone(), pair.form().clone());
    let u = Uenv::new(g.clone(), 3);
    let datum = BDatum::koszul(&g, &b)?;
    datum.validate(&g)?;
    let model = CartanModel::new(g, &b, datum)?;
    for (commutative, d) in [(true, 2), (false, 1)] {
        let slice = BSlice::new(3, 8, d);
        let inv = model.invariants(&u, &slice, commutative)?;
        let mut squares_vanish = true;
        for v in inv.basis() {
            let x = slice.from_vec(v);
            let dx = if commutative {
                model.commutative_differential(&x)?
            } else {
                model.noncommutative_differential(&u, &x)?
            };
            let ddx = if commutative {
                model.commutative_differential(&dx)?
            } else {
                model.noncommutative_differential(&u, &dx)?
            };
            squares_vanish &= ddx.is_zero();
        }
        let kind = if commutative { "commutative" } else { "noncommutative" };
        println!("{kind}: {} invariants up to degree {d}, d_G² = 0: {squares_vanish}", inv.dim());
    }
    Ok(())
}

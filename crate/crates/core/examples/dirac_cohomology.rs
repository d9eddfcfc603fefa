//! Dirac cohomology of the irreducible sl2-modules V(n) and the central-character check.

use cubic_dirac::dirac::{eta_duflo, DiracAlgebra};
use cubic_dirac::fixtures;
use cubic_dirac::liealg::Part;
use cubic_dirac::scalar::format_coords;
use cubic_dirac::specrep::{verify_central_character, DiracMatrix, GModule};
use cubic_dirac::uenv::casimir;
use cubic_dirac::{Error, Field};

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let d = DiracAlgebra::new(&pair, 2)?;
    let omega = casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G))?;
    let eta = eta_duflo(&pair, &omega)?;
    println!("{:>6} {:>5} {:>10} {:>8} {:>6}", "V", "dim", "weights", "χ(Ω)", "holds");
    let mut modules: Vec<GModule> = (0..=4).map(GModule::sl2_irrep).collect();
    modules.push(GModule::sl2_irrep(0).direct_sum(&GModule::sl2_irrep(2)));
    for v in &modules {
        let dm = DiracMatrix::new(&d, v, Field::Rational)?;
        let h = dm.cohomology()?;
        let weights = h.weights(0).map_or("-".to_string(), |w| format_coords(&w));
        match verify_central_character(&dm, &omega, &eta) {
            Ok(c) => println!("{:>6} {:>5} {:>10} {:>8} {:>6}", v.name(), h.dim(), weights, c.chi.to_string(), c.holds),
            Err(Error::NoCentralCharacter(_)) => {
                println!("{:>6} {:>5} {:>10} {:>8} {:>6}", v.name(), h.dim(), weights, "none", "-")
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

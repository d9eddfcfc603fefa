//! The cubic Dirac element 𝒟^p, α and ξ for the sl2 and diagonal sl2 ⊂ sl2⊕sl2 pairs.

use cubic_dirac::dirac::DiracAlgebra;
use cubic_dirac::fixtures;
use cubic_dirac::liealg::{unit, Part};

fn main() -> cubic_dirac::Result<()> {
    for name in ["sl2-cartan", "sl2xsl2-diagonal", "sl2-point"] {
        let pair = fixtures::pair(name);
        let d = DiracAlgebra::new(&pair, 2)?;
        let p_labels = pair.space(Part::P).labels().to_vec();
        println!("{name}");
        println!("  𝒟^p = {}", d.format(d.dirac()));
        println!("  γ_p = {}", d.gamma().format_with(&p_labels));
        let nr = pair.dim(Part::R);
        for x in 0..nr {
            let label = &pair.space(Part::R).labels()[x];
            println!("  α({label}) = {}", d.alpha(&unit(nr, x)).format_with(&p_labels));
            println!("  ξ({label}) = {}", d.format(&d.xi_vector(&unit(nr, x))));
        }
        let square = d.algebra().mul(d.dirac(), d.dirac())?;
        println!("  (𝒟^p)² = {}", d.format(&square));
    }
    Ok(())
}

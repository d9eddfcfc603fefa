//! η_R(Ω) computed through Duflo maps and through the homotopy z⊗1 = ξ(η) + [𝒟^p, a].

use cubic_dirac::dirac::{diagram_sides, eta_duflo, homotopy_residual, solve_homotopy, DiracAlgebra};
use cubic_dirac::fixtures;
use cubic_dirac::liealg::Part;
use cubic_dirac::uenv::casimir;

fn main() -> cubic_dirac::Result<()> {
    for (name, m) in [("sl2-cartan", 1), ("sl2xsl2-diagonal", 2)] {
        let pair = fixtures::pair(name);
        let d = DiracAlgebra::new(&pair, m + 1)?;
        let omega = casimir(d.algebra().uenv(), pair.basis(Part::G), &pair.dual_basis(Part::G))?;
        let r_labels = pair.space(Part::R).labels().to_vec();
        let eta = eta_duflo(&pair, &omega)?;
        let hom = solve_homotopy(&d, &omega, m)?;
        println!("{name}");
        println!("  Ω          = {}", omega.format_with(pair.g().labels()));
        println!("  η_R(Ω)     = {}", eta.format_with(&r_labels));
        println!("  homotopy η = {} (unique: {})", hom.eta.format_with(&r_labels), hom.eta_unique);
        println!("  a_Ω        = {}", d.format(&hom.a));
        println!("  residual   = {}", d.format(&homotopy_residual(&d, &omega, &hom)?));
        let (left, right) = diagram_sides(&pair, &omega, &eta)?;
        println!("  diagram commutes: {}", left == right);
    }
    Ok(())
}

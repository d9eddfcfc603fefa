//! Windowed check of Ker d = ξ(Z(r)) ⊕ Im d on the point-case algebra.

use cubic_dirac::dirac::{verify_kernel_decomposition, DiracAlgebra};
use cubic_dirac::fixtures;

fn main() -> cubic_dirac::Result<()> {
    for name in ["sl2-cartan", "sl2xsl2-diagonal", "sl2-full"] {
        let d = DiracAlgebra::new(&fixtures::pair(name), 4)?;
        let k = verify_kernel_decomposition(&d, 2)?;
        println!(
            "{name}: invariants {}, kernel {}, image {}, ξ(Z(r)) {}, holds {}",
            k.invariant_dim,
            k.kernel_dim,
            k.image_dim,
            k.xi_dim,
            k.holds()
        );
    }
    Ok(())
}

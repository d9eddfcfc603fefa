//! Clifford products on Λ(p) for the sl2 Cartan pair and on Λ(g) for sl2.

use cubic_dirac::cliff::{cartan_element, clifford};
use cubic_dirac::fixtures;
use cubic_dirac::liealg::Part;

fn main() -> cubic_dirac::Result<()> {
    let pair = fixtures::sl2();
    let cl = clifford(&pair, Part::P);
    let labels = cl.labels().to_vec();
    let (e, f) = (cl.generator(0), cl.generator(1));
    println!("c_e ⊙ c_f = {}", cl.odot(&e, &f)?.format_with(&labels));
    println!("c_f ⊙ c_e = {}", cl.odot(&f, &e)?.format_with(&labels));
    println!("c_e ⊙ c_e = {}", cl.odot(&e, &e)?.format_with(&labels));

    let clg = clifford(&pair, Part::G);
    let gamma = cartan_element(&pair, Part::G);
    let g_labels = clg.labels().to_vec();
    println!("γ_g = {}", gamma.format_with(&g_labels));
    println!("γ_g ⊙ γ_g = {}", clg.odot(&gamma, &gamma)?.format_with(&g_labels));
    Ok(())
}

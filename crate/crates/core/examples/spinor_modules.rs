//! Spinor modules on Fock spaces, including a form that only splits over ℚ(i).

use cubic_dirac::liealg::QuadraticSpace;
use cubic_dirac::specrep::SpinorModule;
use cubic_dirac::{Field, Scalar};

fn space(rows: &[&[i64]]) -> QuadraticSpace {
    QuadraticSpace::from_gram(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
        .expect("nondegenerate")
}

fn main() {
    let forms: [(&str, QuadraticSpace); 4] = [
        ("hyperbolic plane", space(&[&[0, 1], &[1, 0]])),
        ("sum of squares", space(&[&[1, 0], &[0, 1]])),
        ("odd, dim 3", space(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 8]])),
        ("dim 4", space(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 2, 1], &[0, 0, 1, -4]])),
    ];
    for (name, v) in &forms {
        for field in [Field::Rational, Field::Gaussian] {
            match SpinorModule::new(v, field) {
                Ok(s) => println!("{name} over {field}: dim S = {}, relations hold: {}", s.dim(), s.check_relations()),
                Err(e) => println!("{name} over {field}: {e}"),
            }
        }
    }
}

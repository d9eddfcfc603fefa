//! Curated pair documents shipped with the crate.
//!
//! The same files live in `fixtures/` and can be passed to the CLI.

use crate::document::PairDocument;
use crate::liealg::QuadraticPair;

pub const NAMES: [&str; 12] = [
    "abelian-line",
    "abelian-plane",
    "gl2-center",
    "sl2-broken-jacobi",
    "sl2-cartan",
    "sl2-corrupted-form",
    "sl2-full",
    "sl2-isotropic",
    "sl2-point",
    "sl2xsl2-diagonal",
    "sl3-cartan",
    "so4-so3",
];

/// Fixtures expected to validate.
pub const VALID: [&str; 9] = [
    "abelian-line",
    "abelian-plane",
    "gl2-center",
    "sl2-cartan",
    "sl2-full",
    "sl2-point",
    "sl2xsl2-diagonal",
    "sl3-cartan",
    "so4-so3",
];

pub fn text(name: &str) -> &'static str {
    match name {
        "abelian-line" => include_str!("../fixtures/abelian-line.json"),
        "abelian-plane" => include_str!("../fixtures/abelian-plane.json"),
        "gl2-center" => include_str!("../fixtures/gl2-center.json"),
        "sl2-broken-jacobi" => include_str!("../fixtures/sl2-broken-jacobi.json"),
        "sl2-cartan" => include_str!("../fixtures/sl2-cartan.json"),
        "sl2-corrupted-form" => include_str!("../fixtures/sl2-corrupted-form.json"),
        "sl2-full" => include_str!("../fixtures/sl2-full.json"),
        "sl2-isotropic" => include_str!("../fixtures/sl2-isotropic.json"),
        "sl2-point" => include_str!("../fixtures/sl2-point.json"),
        "sl3-cartan" => include_str!("../fixtures/sl3-cartan.json"),
        "sl2xsl2-diagonal" => include_str!("../fixtures/sl2xsl2-diagonal.json"),
        "so4-so3" => include_str!("../fixtures/so4-so3.json"),
        other => panic!("unknown fixture `{other}`"),
    }
}

pub fn document(name: &str) -> PairDocument {
    PairDocument::from_json(text(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

/// The validated pair of a fixture; panics on the negative controls.
pub fn pair(name: &str) -> QuadraticPair {
    document(name).to_pair().unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn sl2() -> QuadraticPair {
    pair("sl2-cartan")
}

pub fn diagonal() -> QuadraticPair {
    pair("sl2xsl2-diagonal")
}

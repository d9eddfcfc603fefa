pub mod cli;
pub mod cliff;
pub mod dirac;
pub mod document;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod liealg;
pub mod ncweil;
pub mod scalar;
pub mod specrep;
pub mod uenv;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};

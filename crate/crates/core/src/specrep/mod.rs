//! Finite-dimensional modules, spinors and Dirac cohomology.

mod cohomology;
mod module;
mod spinor;

pub use cohomology::{
    module_action, rational_roots, verify_central_character, CentralCharacterCheck, DiracCohomology, DiracMatrix,
};
pub use module::GModule;
pub use spinor::SpinorModule;

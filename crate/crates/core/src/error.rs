use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("structure constants not antisymmetric at [{0}, {1}]")]
    NotAntisymmetric(String, String),
    #[error("Jacobi identity fails for ({0}, {1}, {2})")]
    JacobiViolation(String, String, String),
    #[error("bilinear form is not symmetric at ({0}, {1})")]
    NotSymmetric(String, String),
    #[error("bilinear form is not invariant: <[{0},{1}],{2}> + <{1},[{0},{2}]> != 0")]
    NotInvariant(String, String, String),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("form restricted to the subalgebra is degenerate")]
    DegenerateRestriction,
    #[error("subalgebra not closed: [{0}, {1}] leaves it")]
    NotSubalgebra(String, String),
    #[error("complement not stable: [{0}, {1}] leaves it")]
    NotStable(String, String),
    #[error("filtration overflow: degree {degree} exceeds cap {cap}")]
    FiltrationOverflow { degree: usize, cap: usize },
    #[error("unsupported degree {degree} (window is {max})")]
    UnsupportedDegree { degree: usize, max: usize },
    #[error("field extension required: {0}")]
    FieldExtensionRequired(String),
    #[error("no central character: {0}")]
    NoCentralCharacter(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("inconsistent differential datum: {0}")]
    InvalidDatum(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("gcd of two zeros is undefined")]
    UndefinedGcd,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid Jordan datum: {0}")]
    InvalidDatum(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exact evaluation unavailable on block {0}")]
    ExactnessUnavailable(String),
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("group is exponential, no witness exists")]
    NoWitness,
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("unsupported lattice: {0}")]
    UnsupportedLattice(String),
    #[error("completion basis is singular")]
    SingularCompletion,
    #[error("automorphism relation fails: {0}")]
    InvalidAutomorphism(String),
    #[error("subspace is not ad-invariant: {0}")]
    InvalidSubspace(String),
    #[error("shape error: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("descriptor mismatch: expected {expected}, found {found}")]
    DescriptorMismatch { expected: String, found: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("invalid cubic norm structure: {0}")]
    StructureInvalid(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("not a norm similarity: {0}")]
    NotASimilarity(String),

    #[error("factorization failed: {0}")]
    FactorizationFailed(String),

    #[error("no witness found: {0}")]
    WitnessNotFound(String),

    #[error("normalizer formula discrepancy: scalar-inverse variant gives {scalar_inverse}, scaled-element variant gives {scaled_element}")]
    FormulaDiscrepancy { scalar_inverse: String, scaled_element: String },

    #[error("pole at t = {t}: {witness}")]
    Pole { t: String, witness: String },

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;

use thiserror::Error;

use crate::coxeter::Generator;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix dimension {0} outside supported range 1..=32")]
    UnsupportedDimension(usize),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("index ({i}, {j}) invalid for elementary matrix of dimension {n}")]
    ElementaryIndex { n: usize, i: usize, j: usize },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decompositions have different totals: {left} vs {right}")]
    TotalMismatch { left: usize, right: usize },

    #[error("invalid Coxeter system: {0}")]
    InvalidSystem(String),

    #[error("generator {0} is not part of the system")]
    UnknownGenerator(Generator),

    #[error("generator {gen} has no matrix image for n = {n}")]
    GeneratorOutOfRange { gen: Generator, n: usize },

    #[error("coset enumeration exceeded {limit} cosets")]
    CosetLimit { limit: usize },

    #[error("matrix closure exceeded {limit} elements")]
    ElementLimit { limit: usize },

    #[error("brute-force enumeration of total {total} exceeds cap {cap}")]
    EnumerationCap { total: usize, cap: usize },

    #[error("no coset-representative proposition applies: {0}")]
    Hypothesis(String),

    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
}

impl Error {
    /// Resource exhaustion, as opposed to malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::CosetLimit { .. } | Error::ElementLimit { .. } | Error::EnumerationCap { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

use crate::exact::Inertia;

/// Everything that can go wrong inside the library.
///
/// Variants split into validation failures (the input is well formed but
/// describes something inadmissible) and parse failures; see [`Error::is_validation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular: zero pivot in column {column} with no row exchange available")]
    SingularMatrix { column: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("pairing is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error(
        "exceptional Gram matrix is not negative definite (signature +{} -{} 0:{})",
        .0.positives, .0.negatives, .0.zeros
    )]
    NotNegativeDefinite(Inertia),
    #[error("invalid local-term override: {0}")]
    InvalidOverride(String),
    #[error("invalid singularity profile: {0}")]
    InvalidProfile(String),
    #[error("Hilbert function takes a non-integral value at m = {m}")]
    NotIntegral { m: u64 },
    #[error("K_F^2 must be positive, got {0}")]
    NonPositiveVolume(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("Riemann-Hurwitz yields odd 2g - 2 = {0}")]
    NonIntegralGenus(String),
    #[error("Riemann-Hurwitz yields negative genus {0}")]
    NegativeGenus(String),
    #[error("cannot parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: &'static str },
}

impl Error {
    /// Stable machine-readable code, used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NotNegativeDefinite(_) => "NotNegativeDefinite",
            Error::InvalidOverride(_) => "InvalidOverride",
            Error::InvalidProfile(_) => "InvalidProfile",
            Error::NotIntegral { .. } => "NotIntegral",
            Error::NonPositiveVolume(_) => "NonPositiveVolume",
            Error::InvalidInput(_) => "InvalidInput",
            Error::NonIntegralGenus(_) => "NonIntegralGenus",
            Error::NegativeGenus(_) => "NegativeGenus",
            Error::ParseRational { .. } => "ParseRational",
        }
    }

    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::ParseRational { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

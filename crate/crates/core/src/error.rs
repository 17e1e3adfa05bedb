//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by root-system construction, the polynomial engine,
/// the space catalog and the cohomology/characteristic-class layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// (label, rank) is not a valid simple compact type.
    #[error("invalid simple type: {0}")]
    InvalidType(String),

    /// A symmetric-function index was outside 0..=#vars.
    #[error("symmetric function index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    /// Buchberger requires homogeneous generators.
    #[error("non-homogeneous ideal generator: {0}")]
    NonHomogeneousInput(String),

    /// Two polynomials from different variable sets were combined.
    #[error("variable set mismatch: {0}")]
    VariableMismatch(String),

    /// A space parameter violated its validity bound.
    #[error("invalid parameters for {space}: {bound}")]
    InvalidParameters { space: String, bound: String },

    /// The requested computation is not built for this space
    /// (non-equal-rank family or a stretch family).
    #[error("unsupported space for this computation: {0}")]
    UnsupportedSpace(String),

    /// Hirsch's formula applies to equal-rank pairs only.
    #[error("not an equal-rank space: {0}")]
    NotEqualRank(String),

    /// Chern classes exist only for the Hermitian families.
    #[error("not a Hermitian space: {0}")]
    NotHermitian(String),

    /// Pontrjagin numbers need 4 | dim.
    #[error("dimension {dim} of {space} is not divisible by 4")]
    DimensionNotDivisibleBy4 { space: String, dim: usize },

    /// The reduced Euler class vanished, so calibration is impossible;
    /// signals a wrong K-embedding.
    #[error("degenerate Euler class for {0}")]
    DegenerateEulerClass(String),

    /// Integrand degree exceeds the top degree of the ring.
    #[error("degree {degree} above top degree {top}")]
    DegreeAboveTop { degree: u64, top: u64 },

    /// Minimal-index arithmetic needs nonzero Euler characteristics.
    #[error("zero Euler characteristic input")]
    ZeroEulerCharacteristic,

    /// Internal consistency failure (an invariant of a presentation broke).
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

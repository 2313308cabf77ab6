use thiserror::Error;

/// Errors raised by the spinor, frame, projector and field routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("SL(2,C) element is not unimodular: |det A - 1| = {0:e}")]
    NonUnitDeterminant(f64),
    #[error("mass must be non-negative, got {0}")]
    NegativeMass(f64),
    #[error("momentum is not null: p·p = {0:e}")]
    NotNull(f64),
    #[error("momentum is not future-pointing")]
    NotFuturePointing,
    #[error("spinor is zero")]
    ZeroSpinor,
    #[error("momentum is not timelike: p·p = {0:e}")]
    NotTimelike(f64),
    #[error("reference spinor is degenerate for this momentum (p^BB' nu_B nubar_B' = {0:e})")]
    DegenerateReference(f64),
    #[error("eigenvalues are complex: discriminant {0:e}")]
    ComplexEigenvalues(f64),
    #[error("spin direction is degenerate: lambda = {0:e}")]
    DegenerateSpinDirection(f64),
    #[error("operation is not defined for massless momenta")]
    MasslessNotSupported,
    #[error("operation requires a massive field or frame")]
    NotMassive,
    #[error("valence mismatch: expected {expected}, found {found}")]
    ValenceMismatch { expected: String, found: String },
    #[error("frame does not belong to the field momentum")]
    FrameMismatch,
    #[error("direction {index} is orthogonal to the momentum: t·p = {dot:e}")]
    OrthogonalDirection { index: usize, dot: f64 },
    #[error("field strength is not antisymmetric (residual {0:e})")]
    NotAntisymmetric(f64),
    #[error("spinor and tensor data describe different fields (residual {0:e})")]
    InconsistentPair(f64),
    #[error("invalid grid resolution: {0}")]
    InvalidResolution(String),
    #[error("rank {0} exceeds the supported maximum of {max}", max = crate::bw::MAX_RANK)]
    RankTooLarge(usize),
    #[error("momentum is off shell: p·p = {found}, expected {expected}")]
    OffShell { found: f64, expected: f64 },
    #[error("sample {index}: {source}")]
    AtSample { index: usize, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Tags an error with the grid or file sample where it occurred.
    pub fn at_sample(self, index: usize) -> Self {
        Error::AtSample {
            index,
            source: Box::new(self),
        }
    }

    pub(crate) fn valence(expected: impl std::fmt::Display, found: impl std::fmt::Display) -> Self {
        Error::ValenceMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

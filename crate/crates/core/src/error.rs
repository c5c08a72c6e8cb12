use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("diagram is empty")]
    EmptyDiagram,
    #[error("column {0} is zero below the projective dimension")]
    GapColumn(usize),
    #[error("hilbert numerator is identically zero")]
    ZeroNumerator,
    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("sequence lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("gap coordinate {0} is negative or not an integer")]
    NegativeGap(String),
    #[error("not a degree sequence: {0:?}")]
    InvalidSequence(Vec<i64>),
    #[error("index error: {0}")]
    IndexError(String),
    #[error("outside the nonnegative orthant: {0}")]
    DomainError(String),
    #[error("linear form vanishes at the evaluation point: {0}")]
    PoleError(String),
    #[error("not in the cone of Betti diagrams: {0}")]
    NotInCone(String),
    #[error("column 1 is empty (free module)")]
    NoFirstSyzygy,
    #[error("scan bounds out of range: {0}")]
    BoundsError(String),
    #[error("invalid asymptotic parameters: {0}")]
    ParamError(String),
    #[error("gap tail violates the defect constraint: {0}")]
    ConstraintError(String),
    #[error("too many generators: {0} (limit {max})", max = crate::monomial::MAX_GENERATORS)]
    TooManyGenerators(usize),
    #[error("unknown family: {0}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Stable kebab-case tag for machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyDiagram => "empty-diagram",
            Error::GapColumn(_) => "gap-column",
            Error::ZeroNumerator => "zero-numerator",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::LengthMismatch(..) => "length-mismatch",
            Error::NegativeGap(_) => "negative-gap",
            Error::InvalidSequence(_) => "invalid-sequence",
            Error::IndexError(_) => "index-error",
            Error::DomainError(_) => "domain-error",
            Error::PoleError(_) => "pole-error",
            Error::NotInCone(_) => "not-in-cone",
            Error::NoFirstSyzygy => "no-first-syzygy",
            Error::BoundsError(_) => "bounds-error",
            Error::ParamError(_) => "param-error",
            Error::ConstraintError(_) => "constraint-error",
            Error::TooManyGenerators(_) => "too-many-generators",
            Error::UnknownName(_) => "unknown-name",
            Error::Parse(_) => "parse-error",
        }
    }

    /// Mathematical findings about valid input, as opposed to bad input.
    pub fn is_finding(&self) -> bool {
        matches!(self, Error::NotInCone(_))
    }
}

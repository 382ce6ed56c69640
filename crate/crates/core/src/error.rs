use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("support set is empty")]
    EmptySupport,
    #[error("point has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("duplicate point in support set")]
    DuplicatePoint,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("covector is constant on the set; second value undefined")]
    SecondValueUndefined,
    #[error("Minkowski difference is empty")]
    EmptyResult,
    #[error("polytope has a non-integer vertex")]
    NotLattice,
    #[error("unbound symbol `{0}`")]
    UnboundSymbol(String),
    #[error("axis coordinate is constant on the support set")]
    DegenerateAxis,
    #[error("denominator undefined: the set lies in a hyperplane x1 - x2 = const")]
    DenominatorUndefined,
    #[error("coefficient vectors are linearly dependent")]
    DependentVectors,
    #[error("subset is not a face")]
    NotAFace,
    #[error("polytope is not full-dimensional")]
    NotFullDim,
    #[error("support set contains the origin")]
    ContainsOrigin,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("oracle inconclusive: {0}")]
    OracleInconclusive(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::EmptySupport => "EmptySupport",
            Error::WrongLength { .. } => "WrongLength",
            Error::DuplicatePoint => "DuplicatePoint",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::SecondValueUndefined => "SecondValueUndefined",
            Error::EmptyResult => "EmptyResult",
            Error::NotLattice => "NotLattice",
            Error::UnboundSymbol(_) => "UnboundSymbol",
            Error::DegenerateAxis => "DegenerateAxis",
            Error::DenominatorUndefined => "DenominatorUndefined",
            Error::DependentVectors => "DependentVectors",
            Error::NotAFace => "NotAFace",
            Error::NotFullDim => "NotFullDim",
            Error::ContainsOrigin => "ContainsOrigin",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::OracleInconclusive(_) => "OracleInconclusive",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::scalars::Ring;

/// Coarse grouping used by front ends to pick an exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// A well-formed question whose answer is a refusal.
    Domain,
    /// Malformed or inconsistent input.
    Input,
    /// A produced object failed its own exact check.
    SelfCheck,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: Ring, right: Ring },
    #[error("cannot demote {from} to {to}: {detail}")]
    Demotion {
        from: Ring,
        to: Ring,
        detail: String,
    },
    #[error("division by zero")]
    ZeroDivisor,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("{0}")]
    NotQuaternionic(String),
    #[error("spectrum not supported: factor {factor} has no roots in Q(i)")]
    SpectrumNotSupported { factor: String },
    #[error("spectrum hint rejected: {0}")]
    HintMismatch(String),
    #[error("Jordan form does not certify the input")]
    FormMismatch,
    #[error("illegal block: {0}")]
    IllegalBlock(String),
    #[error("input is singular; reversibility is only defined for invertible elements")]
    SingularInput,
    #[error("not reversible: {0}")]
    NotReversible(String),
    #[error("not Ad-real: {0}")]
    NotAdReal(String),
    #[error("not strongly reversible: {0}")]
    NotStronglyReversible(String),
    #[error("determinant condition fails: {0}")]
    DeterminantNotUnit(String),
    #[error("no factorization found: {0}")]
    UnsupportedFactorization(String),
    #[error("witness construction failed: {0}")]
    WitnessConstructionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch { .. } => "RingMismatch",
            Error::Demotion { .. } => "Demotion",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::Singular => "Singular",
            Error::NotNilpotent => "NotNilpotent",
            Error::NotQuaternionic(_) => "NotQuaternionic",
            Error::SpectrumNotSupported { .. } => "SpectrumNotSupported",
            Error::HintMismatch(_) => "HintMismatch",
            Error::FormMismatch => "FormMismatch",
            Error::IllegalBlock(_) => "IllegalBlock",
            Error::SingularInput => "SingularInput",
            Error::NotReversible(_) => "NotReversible",
            Error::NotAdReal(_) => "NotAdReal",
            Error::NotStronglyReversible(_) => "NotStronglyReversible",
            Error::DeterminantNotUnit(_) => "DeterminantNotUnit",
            Error::UnsupportedFactorization(_) => "UnsupportedFactorization",
            Error::WitnessConstructionFailed(_) => "WitnessConstructionFailed",
            Error::Parse(_) => "Parse",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::InternalInvariant(_) => "InternalInvariant",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::SpectrumNotSupported { .. }
            | Error::SingularInput
            | Error::NotReversible(_)
            | Error::NotAdReal(_)
            | Error::NotStronglyReversible(_)
            | Error::DeterminantNotUnit(_)
            | Error::UnsupportedFactorization(_) => ErrorClass::Domain,
            Error::WitnessConstructionFailed(_) | Error::InternalInvariant(_) => {
                ErrorClass::SelfCheck
            }
            _ => ErrorClass::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::algebra::Rat;

/// Errors raised by the algebra, elimination and evaluation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,

    #[error("rational function has a pole at k = {0}")]
    PoleAt(Rat),

    #[error("parameter {0:?} is not in the semigroup generated by the columns")]
    NotInSemigroup(Vec<i64>),

    #[error("no Pfaffian row with support in the basis up to degree T = {max_degree}; X may be non-generic or S is not a basis")]
    GenericityFailure { max_degree: u32 },

    #[error("basis element {0:?} is reducible by the toric Groebner basis")]
    BasisNotIrreducible(Vec<u32>),

    #[error("recurrence step k = {k} is singular: {reason}")]
    SingularStep { k: i64, reason: String },

    #[error("normalizing constant is zero")]
    ZeroNormalizer,

    #[error("no linear form with value 1 on every column: {0}")]
    NoHyperplane(String),

    #[error("{field}: {message}")]
    Invalid { field: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("methods disagree at k = {k}: hgm {hgm}, enumeration {enumerate}")]
    Mismatch { k: i64, hgm: String, enumerate: String },
}

impl Error {
    /// Process exit status for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid { .. } | Error::Parse(_) | Error::NoHyperplane(_) => 2,
            Error::Mismatch { .. } => 3,
            Error::NotInSemigroup(_) => 4,
            Error::Singular
            | Error::PoleAt(_)
            | Error::GenericityFailure { .. }
            | Error::BasisNotIrreducible(_)
            | Error::SingularStep { .. }
            | Error::ZeroNormalizer => 5,
        }
    }

    pub(crate) fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

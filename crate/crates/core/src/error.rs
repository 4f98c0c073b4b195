use thiserror::Error;

use crate::ComplexScalar;

/// Errors raised across the crate. Out-of-domain inputs are reported here
/// rather than escaping as NaN or infinity.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: ComplexScalar },

    #[error("{function} is undefined at {at}: {reason}")]
    Domain { function: &'static str, at: ComplexScalar, reason: &'static str },

    #[error("parse error at byte {position}: expected {expected}, found {found}")]
    Parse { position: usize, expected: String, found: String },

    #[error("polynomial must have degree at least 1")]
    Degree,

    #[error("polynomial is not squarefree (gcd with derivative has degree {gcd_degree})")]
    NotSquarefree { gcd_degree: usize },

    #[error("invalid precision config: {0}")]
    Config(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::Domain { .. } => "domain",
            Error::Parse { .. } => "parse",
            Error::Degree => "degree",
            Error::NotSquarefree { .. } => "not_squarefree",
            Error::Config(_) => "config",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

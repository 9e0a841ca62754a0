use thiserror::Error;

use crate::asnorm::NormError;
use crate::gf::GfError;
use crate::invariants::InvariantsError;
use crate::parse::ParseError;
use crate::zeta::ZetaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    Field(#[from] GfError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

impl Error {
    /// Process exit status for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Field(_) | Error::Parse(_) => 2,
            Error::Norm(NormError::TrivialExtension) => 3,
            Error::Norm(NormError::NonGeometric) => 4,
            Error::Zeta(ZetaError::BudgetExceeded { .. }) => 5,
            Error::Invariants(_) | Error::Zeta(_) => 1,
        }
    }
}

use fradkin::error::Error;
use thiserror::Error as ThisError;

use crate::config::ConfigError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] ConfigError),
    #[error("error[{}]: {}", name(.0), .0)]
    Lib(#[from] Error),
    #[error("output failed: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(_) | CliError::Output(_) => 3,
        }
    }
}

/// Variant name, printed so scripts can match on it.
pub fn name(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::IndexOutOfRange(_) => "IndexOutOfRange",
        Error::NotInSpan => "NotInSpan",
        Error::ZeroModeUnsupported => "ZeroModeUnsupported",
        Error::ModeMismatch => "ModeMismatch",
        Error::Unsupported(_) => "Unsupported",
        Error::SingularStep { .. } => "SingularStep",
        Error::NonUniformWeights(_) => "NonUniformWeights",
        Error::DegenerateAngularMomentum => "DegenerateAngularMomentum",
        Error::SingularFamilyMatrix(_) => "SingularFamilyMatrix",
        Error::CountMismatch { .. } => "CountMismatch",
        Error::SingularMatrix => "SingularMatrix",
        Error::InvalidParameter(_) => "InvalidParameter",
        Error::ParseRational(_) => "ParseRational",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lib_errors_carry_their_name() {
        let e = CliError::from(Error::DegenerateAngularMomentum);
        assert!(e
            .to_string()
            .starts_with("error[DegenerateAngularMomentum]: degenerate angular momentum"));
        assert_eq!(e.exit_code(), 3);
    }
}

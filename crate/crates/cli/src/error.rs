use std::path::PathBuf;

use chromogeometry::Error as GeomError;
use thiserror::Error;

/// Failures surfaced by the command line, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("degenerate triangle: {0}")]
    Degenerate(GeomError),

    #[error("field error: {0}")]
    Field(String),

    #[error("cannot write {path}: {source}")]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("theorem check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Degenerate(_) => 3,
            CliError::Field(_) => 4,
            CliError::Output { .. } => 5,
            CliError::CheckFailed(_) => 1,
        }
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Parse { .. } | GeomError::DivisionByZero | GeomError::DegenerateLine => {
                CliError::Input(e.to_string())
            }
            GeomError::DegenerateTriangle | GeomError::CoincidentPoints => CliError::Degenerate(e),
            GeomError::InvalidModulus(_)
            | GeomError::CharacteristicThree
            | GeomError::MixedFields(..) => CliError::Field(e.to_string()),
            other => CliError::CheckFailed(other.to_string()),
        }
    }
}

use std::process::ExitCode;

use antilimit::engine::EngineError;
use antilimit::series::SeriesError;
use antilimit::solver::SolverError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    /// The series is outside what polynomial extrapolation can sum.
    #[error("{message}")]
    Rejected { message: String, hint: Option<String> },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 3,
            CliError::Rejected { .. } => 2,
            CliError::Io(_) => 4,
            CliError::Failed(_) => 1,
        })
    }

    pub fn hint(&self) -> Option<&str> {
        match self {
            CliError::Rejected { hint, .. } => hint.as_deref(),
            _ => None,
        }
    }

    fn rejected(message: String) -> Self {
        CliError::Rejected { message, hint: None }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::Io(io),
            other => CliError::Failed(format!("csv: {other:?}")),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Failed(format!("json: {e}"))
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Series(SeriesError::OutOfTerms { requested, available }) => CliError::rejected(format!(
                "rejected: explicit series has {available} terms but the fit needed term {requested}; \
                 supply at least 2*(degree+1+verify) terms or lower --verify"
            )),
            e @ (EngineError::NotPolynomial { .. }
            | EngineError::NotAlternatingDivergent(_)
            | EngineError::InsufficientPoints { .. }
            | EngineError::Series(_)) => CliError::rejected(format!("rejected: {e}")),
            e @ (EngineError::NonUniformStride | EngineError::InvalidOptions) => CliError::Parse(e.to_string()),
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Engine(inner) => inner.into(),
            e @ SolverError::NoIntersection(_) => CliError::Rejected {
                message: format!("rejected: {e}"),
                hint: Some(
                    "add a summable companion and use `deduce`, e.g. \
                     antilimit deduce 'eta(-1)+eta(0)' --known 'eta(-1)'"
                        .into(),
                ),
            },
            e @ SolverError::IdenticalBranches => CliError::rejected(format!("rejected: {e}")),
            e @ SolverError::SpecMismatch(_) => CliError::Parse(e.to_string()),
            e => CliError::Failed(e.to_string()),
        }
    }
}

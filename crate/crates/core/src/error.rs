use std::fmt;

use thiserror::Error;

use crate::exprlang::{EvalError, ParseError};
use crate::report::ConvergenceReport;

/// Pipeline stage an error originated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Parse,
    Eval,
    Input,
    Metric,
    Criteria,
    Config,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stage::Parse => "parse",
            Stage::Eval => "eval",
            Stage::Input => "input",
            Stage::Metric => "metric",
            Stage::Criteria => "criteria",
            Stage::Config => "config",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error {0}")]
    Parse(#[from] ParseError),
    #[error("eval error: {0}")]
    Eval(#[from] EvalError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("metric error: {0}")]
    Metric(String),
    #[error("criteria error: {0}")]
    Criteria(String),
    #[error("config error: {0}")]
    Config(String),
    /// Classification aborted; `partial` holds everything computed before the failure.
    #[error("{stage} stage failed while analyzing '{}': {source}", partial.sequence_id)]
    Analysis {
        stage: Stage,
        source: Box<Error>,
        partial: Box<ConvergenceReport>,
    },
}

impl Error {
    pub fn stage(&self) -> Stage {
        match self {
            Error::Parse(_) => Stage::Parse,
            Error::Eval(_) => Stage::Eval,
            Error::Input(_) => Stage::Input,
            Error::Metric(_) => Stage::Metric,
            Error::Criteria(_) => Stage::Criteria,
            Error::Config(_) => Stage::Config,
            Error::Analysis { stage, .. } => *stage,
        }
    }

    /// Innermost error, looking through analysis wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Analysis { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

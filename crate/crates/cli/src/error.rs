use std::fmt::Display;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    Validation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("section type mismatch: {0}")]
    SectionType(String),
}

impl CliError {
    pub fn field(field: impl Display, err: impl Display) -> Self {
        CliError::Validation(format!("{field}: {err}"))
    }

    /// 2 for unreadable or malformed input, 3 for a failed computation
    /// precondition, 4 for a section of the wrong type.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::SectionType(_) => 4,
        }
    }
}

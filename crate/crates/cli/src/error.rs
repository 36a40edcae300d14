use arc3d::layout::LayoutError;
use thiserror::Error;

/// Failure to read an input document.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("{0}")]
    Validation(String),
}

impl FormatError {
    pub(crate) fn validation(message: impl Into<String>) -> Self {
        FormatError::Validation(message.into())
    }
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        // serde_json appends " at line L column C"; the position is reported separately
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        FormatError::Parse { line: e.line(), column: e.column(), message }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("{failed} of {total} bound checks failed")]
    BoundsFailed { failed: usize, total: usize },
}

impl CliError {
    /// 1 usage, 2 invalid input or infeasible request, 3 bound violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Layout(LayoutError::BoundViolation(_)) | CliError::BoundsFailed { .. } => 3,
            CliError::Format(_) | CliError::Io(_) | CliError::Layout(_) => 2,
        }
    }
}

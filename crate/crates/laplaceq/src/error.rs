use std::fmt;

use laplaceq_core::Error as CoreError;

use crate::graph_json::GraphParseError;

/// Failure of a command, carrying the process exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    /// Invalid flag combination or flag value.
    #[error("{flag}: {message}")]
    Usage { flag: String, message: String },

    #[error("{source_name}: {error}")]
    Parse {
        source_name: String,
        error: GraphParseError,
    },

    #[error("{context}: {error}")]
    Domain { context: String, error: CoreError },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl AppError {
    pub fn usage(flag: impl fmt::Display, message: impl Into<String>) -> Self {
        AppError::Usage {
            flag: flag.to_string(),
            message: message.into(),
        }
    }

    pub fn domain(context: impl Into<String>, error: CoreError) -> Self {
        AppError::Domain {
            context: context.into(),
            error,
        }
    }

    /// 2 for numerical failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Domain { error, .. } if error.is_numerical() => 2,
            _ => 1,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;

/// Attaches a context label (usually the offending flag) to core errors.
pub trait Context<T> {
    fn context(self, label: impl Into<String>) -> AppResult<T>;
}

impl<T> Context<T> for Result<T, CoreError> {
    fn context(self, label: impl Into<String>) -> AppResult<T> {
        self.map_err(|e| AppError::domain(label, e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let numerical = AppError::domain("--graph", CoreError::NumericalFailure { sweeps: 100, residual: 1e-3 });
        assert_eq!(numerical.exit_code(), 2);
        let psd = AppError::domain("--graph", CoreError::NotPositiveSemidefinite { eigenvalue: -1e-3 });
        assert_eq!(psd.exit_code(), 2);
        let degenerate = AppError::domain("--graph", CoreError::DegenerateInput("no edges".into()));
        assert_eq!(degenerate.exit_code(), 1);
        assert_eq!(AppError::usage("--n", "missing").exit_code(), 1);
        assert_eq!(AppError::usage("--n", "missing").to_string(), "--n: missing");
    }
}

use std::fmt;

/// Failure classes mapped to exit codes: usage 1, numeric 2, acceptance 3.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
    Acceptance(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numeric(_) => 2,
            CliError::Acceptance(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(m) => write!(f, "{m}"),
            CliError::Acceptance(m) => write!(f, "acceptance check failed: {m}"),
        }
    }
}

impl From<hellmann_core::Error> for CliError {
    fn from(e: hellmann_core::Error) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Numeric(format!("i/o error: {e}"))
    }
}

use std::fmt;

/// Failure classes with stable exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input, unreadable file, parameter out of range or budget exceeded.
    Usage(String),
    /// An identity, bijection or domain condition failed.
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Math(m) => f.write_str(m),
        }
    }
}

impl From<lppqs::Error> for CliError {
    fn from(e: lppqs::Error) -> Self {
        use lppqs::Error::*;
        match e {
            Parse(_) | OutOfRange(_) | BudgetExceeded(_) => CliError::Usage(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("serialization: {e}"))
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Usage(format!("csv: {e}"))
    }
}

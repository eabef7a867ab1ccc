use std::fmt;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input, unknown element, or a definition that fails validation.
    Parse(String),
    /// A search ran out of budget before finishing.
    Budget(usize),
    /// A cross-check disagreed with the primary computation.
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Budget(_) => EXIT_INCONCLUSIVE,
            CliError::Invariant(_) => EXIT_INVARIANT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Budget(budget) => write!(f, "inconclusive: budget of {budget} exceeded"),
            CliError::Invariant(msg) => write!(f, "invariant failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

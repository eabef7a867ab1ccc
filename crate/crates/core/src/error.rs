use alloc::string::String;
use core::fmt;

/// Errors raised by the structural constructors and contract-checked operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live on ground sets of different sizes.
    GroundSizeMismatch { left: usize, right: usize },
    /// A point lies outside `0..ground_size`.
    PointOutOfRange { point: usize, ground_size: usize },
    /// A source point is mapped twice.
    NotAFunction { source: usize },
    /// Two source points share a target.
    NotInjective { target: usize },
    /// `close` was called with no generators.
    EmptyGenerators,
    /// Closure produced more elements than the caller allowed.
    BudgetExceeded { budget: usize },
    /// A multiplication table is not a valid inverse semigroup.
    InvalidTable(String),
    /// An action definition is inconsistent with its semigroup.
    InvalidAction(String),
    /// An operation was called outside its precondition.
    Contract(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundSizeMismatch { left, right } => {
                write!(f, "ground size mismatch: {left} vs {right}")
            }
            Error::PointOutOfRange { point, ground_size } => {
                write!(f, "point {point} outside ground set of size {ground_size}")
            }
            Error::NotAFunction { source } => write!(f, "point {source} is mapped twice"),
            Error::NotInjective { target } => write!(f, "point {target} is hit twice"),
            Error::EmptyGenerators => f.write_str("generator list is empty"),
            Error::BudgetExceeded { budget } => {
                write!(f, "inconclusive: element budget of {budget} exceeded")
            }
            Error::InvalidTable(msg) => write!(f, "invalid multiplication table: {msg}"),
            Error::InvalidAction(msg) => write!(f, "invalid action: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

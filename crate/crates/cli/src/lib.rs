//! File formats, reports and command dispatch for the `pick` binary.

pub mod formats;
pub mod report;
pub mod run;

use core::fmt;

use pickset_core::Error;

pub use run::{execute, Command, RunConfig};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// Numerical failure or an internal consistency alarm.
    pub const NUMERICAL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const UNSOLVABLE: i32 = 3;
    pub const UNDECIDED: i32 = 4;
    pub const HYPOTHESIS_VIOLATED: i32 = 5;
    pub const DEGENERATE_INPUT: i32 = 6;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn parse(msg: impl fmt::Display) -> Self {
        CliError {
            code: exit::PARSE,
            message: msg.to_string(),
        }
    }

    /// An input that parsed but does not describe a valid object.
    pub fn invalid(e: Error) -> Self {
        match e {
            Error::InvalidProblem(_) | Error::DimensionMismatch { .. } | Error::Precondition(_) => Self::parse(e),
            other => Self::from_core(other),
        }
    }

    pub fn from_core(e: Error) -> Self {
        let code = match e {
            Error::InvalidProblem(_) => exit::PARSE,
            Error::Unsolvable => exit::UNSOLVABLE,
            Error::ExtremalMinimalViolated { .. }
            | Error::IndefiniteInput(_)
            | Error::Precondition(_)
            | Error::NotSingular { .. } => exit::HYPOTHESIS_VIOLATED,
            Error::CommonFactor
            | Error::ZeroPolynomial
            | Error::DegenerateElimination
            | Error::DegreeZero
            | Error::NotStable { .. }
            | Error::NotInner(_)
            | Error::NotMonomial => exit::DEGENERATE_INPUT,
            _ => exit::NUMERICAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::from_core(e)
    }
}

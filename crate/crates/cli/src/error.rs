use std::fmt;

use star_frobenius::alphabet::AlphabetError;
use star_frobenius::automata::{AutomataError, NfaFormatError};
use star_frobenius::numeric::NumericError;
use star_frobenius::oracle::OracleError;
use star_frobenius::reduction::ReductionError;
use star_frobenius::regex::SyntaxError;

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const SEMANTIC: u8 = 3;
    pub const BUDGET: u8 = 4;
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            code: exit::INPUT,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: exit::INTERNAL,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<NfaFormatError> for CliError {
    fn from(e: NfaFormatError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<AlphabetError> for CliError {
    fn from(e: AlphabetError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<AutomataError> for CliError {
    fn from(e: AutomataError) -> Self {
        let code = match e {
            AutomataError::AlphabetMismatch { .. } | AutomataError::UnknownSymbol(_) => {
                exit::SEMANTIC
            }
            _ => exit::INTERNAL,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Automata(inner) => inner.into(),
            ReductionError::TooLarge { .. } => CliError {
                code: exit::BUDGET,
                message: e.to_string(),
            },
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<NumericError> for CliError {
    fn from(e: NumericError) -> Self {
        let code = match e {
            NumericError::Empty | NumericError::NonPositive => exit::INPUT,
            NumericError::GcdNotOne(_) => exit::SEMANTIC,
            NumericError::TooLarge(_) => exit::BUDGET,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        let code = match e {
            OracleError::BudgetExceeded { .. } => exit::BUDGET,
            OracleError::SymbolOutsideAlphabet(_) => exit::SEMANTIC,
            OracleError::EmptyAlphabet | OracleError::ZeroHorizon => exit::INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

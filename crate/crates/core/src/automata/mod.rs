//! Automata for Kleene closures: position NFAs, subset construction,
//! complementation, and the finiteness / longest-word analyses.

mod bitset;
pub mod dfa;
pub mod glushkov;
pub mod matrix;
pub mod nfa;
pub mod text;

use thiserror::Error;

pub use dfa::{
    complement, is_infinite, longest_accepted, subset_construct, trim_useful, window_accepts,
    Analysis, Dfa, UsefulStates,
};
pub use glushkov::{glushkov, glushkov_star};
pub use matrix::{verify_rejected, ReachabilityMatrix};
pub use nfa::Nfa;
pub use text::{format_nfa, parse_nfa, NfaFormatError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomataError {
    #[error("alphabet is missing symbols {missing:?}")]
    AlphabetMismatch { missing: Vec<char> },
    #[error("symbol '{0}' is not in the automaton's alphabet")]
    UnknownSymbol(char),
    #[error("state {state} out of range (automaton has {state_count} states)")]
    StateOutOfRange { state: usize, state_count: usize },
    #[error("transition table is not total")]
    IncompleteDfa,
    #[error("language is infinite")]
    InfiniteLanguage,
}

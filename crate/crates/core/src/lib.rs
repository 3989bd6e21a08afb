//! Decides whether the Kleene closure of a regular language is co-finite and,
//! when it is, computes its Frobenius length: the length of the longest word
//! missing from the closure, together with a witness word.
//!
//! The crate also generates hard instances from 3-CNF formulas and ships an
//! automaton-free brute-force oracle for cross-validation.

pub mod alphabet;
pub mod automata;
pub mod regex;

pub use alphabet::Alphabet;
pub use regex::{alphabet_of, parse_regex, symbol_length, RegexAst};
pub mod frobenius;
pub mod numeric;
pub mod oracle;
mod verdict;

pub use frobenius::{
    decide_cofinite, frobenius_of_finite_set, length_spectrum, Decision, StarInput,
};
pub use verdict::CofiniteResult;
pub mod gen;
pub mod reduction;
pub mod selftest;

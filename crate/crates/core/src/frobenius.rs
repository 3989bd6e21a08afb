//! The end-to-end co-finiteness decision for `S*`, where S is given by a
//! regular expression, an NFA, or an explicit finite word set.
//!
//! Pipeline: closure NFA, subset construction over the effective alphabet,
//! complement, trim. A cycle among the useful complement states means
//! infinitely many words are missing; the shortest missing word with length
//! in `[n', 2n')` (n' = useful complement states) is reported as evidence.
//! Otherwise the complement is a finite language and its longest word gives
//! the Frobenius length.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{
    complement, glushkov, glushkov_star, subset_construct, window_accepts, Analysis, AutomataError,
    Nfa,
};
use crate::regex::{alphabet_of, symbol_length, RegexAst};
pub use crate::verdict::CofiniteResult;

/// The language S whose closure is examined.
#[derive(Debug, Clone, Copy)]
pub enum StarInput<'a> {
    Regex(&'a RegexAst),
    /// S = L(M).
    Nfa(&'a Nfa),
}

impl StarInput<'_> {
    fn inferred_alphabet(&self) -> Alphabet {
        match self {
            StarInput::Regex(ast) => alphabet_of(ast),
            StarInput::Nfa(nfa) => nfa.alphabet().clone(),
        }
    }

    /// Automaton for S* (not S).
    pub fn closure_nfa(&self) -> Nfa {
        match self {
            StarInput::Regex(ast) => glushkov_star(ast),
            StarInput::Nfa(nfa) => nfa.star_closure(),
        }
    }

    /// Automaton for S itself.
    pub fn language_nfa(&self) -> Nfa {
        match self {
            StarInput::Regex(ast) => glushkov(ast),
            StarInput::Nfa(nfa) => (*nfa).clone(),
        }
    }
}

/// A verdict plus the sizes of the automata that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub result: CofiniteResult,
    pub alphabet: Alphabet,
    /// Symbol occurrences of the expression; `None` for NFA input.
    pub symbol_length: Option<usize>,
    pub nfa_states: usize,
    pub dfa_states: usize,
    /// Useful states of the complement DFA (n').
    pub complement_useful_states: usize,
}

/// Resolves the alphabet a decision runs over: the declared one, which must
/// cover every symbol of the input, or the input's own alphabet.
pub fn effective_alphabet(
    input: StarInput<'_>,
    declared: Option<&Alphabet>,
) -> Result<Alphabet, AutomataError> {
    let inferred = input.inferred_alphabet();
    match declared {
        None => Ok(inferred),
        Some(declared) => {
            let missing = declared.missing_from(&inferred);
            if missing.is_empty() {
                Ok(declared.clone())
            } else {
                Err(AutomataError::AlphabetMismatch { missing })
            }
        }
    }
}

/// Decides whether `S*` is co-finite over the effective alphabet.
pub fn decide_cofinite(
    input: StarInput<'_>,
    alphabet: Option<&Alphabet>,
) -> Result<Decision, AutomataError> {
    let alphabet = effective_alphabet(input, alphabet)?;
    let nfa = input.closure_nfa().with_alphabet(&alphabet)?;
    let dfa = subset_construct(&nfa, &alphabet)?;
    let missing = complement(&dfa);
    let analysis = Analysis::new(&missing);
    let useful = analysis.useful.len();

    let result = if analysis.is_infinite() {
        let (length, witness) = window_accepts(&missing, useful, 2 * useful)
            .expect("a cycle among n' useful states yields an accepted length in [n', 2n')");
        CofiniteResult::NotCofinite { length, witness }
    } else {
        match analysis.longest_accepted(&missing)? {
            Some((length, witness)) => CofiniteResult::Cofinite {
                frobenius_length: Some(length),
                witness: Some(witness),
            },
            None => CofiniteResult::Cofinite {
                frobenius_length: None,
                witness: None,
            },
        }
    };
    Ok(Decision {
        result,
        alphabet,
        symbol_length: match input {
            StarInput::Regex(ast) => Some(symbol_length(ast)),
            StarInput::Nfa(_) => None,
        },
        nfa_states: nfa.state_count(),
        dfa_states: dfa.state_count(),
        complement_useful_states: useful,
    })
}

/// Union of the literal words, as an expression.
pub fn finite_set_regex<S: AsRef<str>>(words: &[S]) -> RegexAst {
    let distinct: BTreeSet<&str> = words.iter().map(|w| w.as_ref()).collect();
    RegexAst::union_all(distinct.into_iter().map(RegexAst::literal))
}

/// [`decide_cofinite`] for an explicit finite set of words over `alphabet`.
pub fn frobenius_of_finite_set<S: AsRef<str>>(
    words: &[S],
    alphabet: &Alphabet,
) -> Result<Decision, AutomataError> {
    let missing: BTreeSet<char> = words
        .iter()
        .flat_map(|w| w.as_ref().chars())
        .filter(|&c| !alphabet.contains(c))
        .collect();
    if !missing.is_empty() {
        return Err(AutomataError::AlphabetMismatch {
            missing: missing.into_iter().collect(),
        });
    }
    decide_cofinite(StarInput::Regex(&finite_set_regex(words)), Some(alphabet))
}

/// Word lengths attained by S up to a horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthSpectrum {
    pub lengths: Vec<usize>,
    /// gcd of the non-zero lengths; 0 when there are none.
    pub gcd: usize,
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Lengths `0..=horizon` at which S has a word, by per-length reachability
/// on an automaton for S.
pub fn length_spectrum(input: StarInput<'_>, horizon: usize) -> LengthSpectrum {
    let nfa = input.language_nfa();
    let mut layer: BTreeSet<usize> = nfa.initial().clone();
    let symbols: Vec<char> = nfa.alphabet().iter().collect();
    let mut lengths = Vec::new();
    for length in 0..=horizon {
        if layer.iter().any(|q| nfa.accepting().contains(q)) {
            lengths.push(length);
        }
        let nfa = &nfa;
        layer = layer
            .iter()
            .flat_map(|&p| symbols.iter().flat_map(move |&a| nfa.successors(p, a)))
            .collect();
    }
    let gcd = lengths.iter().fold(0, |g, &l| gcd(g, l));
    LengthSpectrum { lengths, gcd }
}

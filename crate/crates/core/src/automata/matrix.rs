//! Boolean reachability matrices over NFA states.
//!
//! Entry `(p, q)` of the matrix for a word `w` is true iff the NFA can move
//! from `p` to `q` reading `w`. The matrix for the empty word is the identity
//! and each letter multiplies on the right by that letter's adjacency matrix,
//! so the space used never exceeds one `|Q| x |Q|` matrix.

use super::bitset::StateSet;
use super::nfa::Nfa;
use super::AutomataError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityMatrix {
    rows: Vec<StateSet>,
}

impl ReachabilityMatrix {
    pub fn identity(dimension: usize) -> Self {
        let rows = (0..dimension)
            .map(|p| {
                let mut row = StateSet::new(dimension);
                row.insert(p);
                row
            })
            .collect();
        ReachabilityMatrix { rows }
    }

    pub fn zero(dimension: usize) -> Self {
        ReachabilityMatrix {
            rows: vec![StateSet::new(dimension); dimension],
        }
    }

    /// Adjacency matrix of `symbol` in `nfa`.
    pub fn letter(nfa: &Nfa, symbol: char) -> Result<Self, AutomataError> {
        nfa.symbol_index(symbol)?;
        let mut m = ReachabilityMatrix::zero(nfa.state_count());
        for p in 0..nfa.state_count() {
            for q in nfa.successors(p, symbol) {
                m.rows[p].insert(q);
            }
        }
        Ok(m)
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, p: usize, q: usize) -> bool {
        self.rows[p].contains(q)
    }

    pub fn set(&mut self, p: usize, q: usize) {
        self.rows[p].insert(q);
    }

    /// Boolean product `self * other`.
    pub fn product(&self, other: &ReachabilityMatrix) -> ReachabilityMatrix {
        let dim = self.dimension();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut out = StateSet::new(dim);
                for k in row.iter() {
                    out.union_with(&other.rows[k]);
                }
                out
            })
            .collect();
        ReachabilityMatrix { rows }
    }

    /// Matrix after reading `word`, starting from the identity.
    pub fn after_word(nfa: &Nfa, word: &str) -> Result<Self, AutomataError> {
        let mut m = ReachabilityMatrix::identity(nfa.state_count());
        for c in word.chars() {
            m = m.product(&ReachabilityMatrix::letter(nfa, c)?);
        }
        Ok(m)
    }
}

/// True iff `nfa` rejects `word`: no (initial, accepting) entry of the word's
/// reachability matrix is set.
pub fn verify_rejected(nfa: &Nfa, word: &str) -> Result<bool, AutomataError> {
    let m = ReachabilityMatrix::after_word(nfa, word)?;
    let accepted = nfa
        .initial()
        .iter()
        .any(|&p| nfa.accepting().iter().any(|&q| m.get(p, q)));
    Ok(!accepted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::glushkov::glushkov_star;
    use crate::regex::parse_regex;

    fn star(text: &str) -> Nfa {
        glushkov_star(&parse_regex(text).unwrap())
    }

    #[test]
    fn empty_word_gives_identity() {
        let n = star("ab");
        assert_eq!(
            ReachabilityMatrix::after_word(&n, "").unwrap(),
            ReachabilityMatrix::identity(3)
        );
    }

    #[test]
    fn parity() {
        let n = star("aa");
        assert!(verify_rejected(&n, "a").unwrap());
        assert!(!verify_rejected(&n, "aaaa").unwrap());
        assert!(!verify_rejected(&n, "").unwrap());
    }

    #[test]
    fn two_or_three() {
        let n = star("aa+aaa");
        assert!(verify_rejected(&n, "a").unwrap());
        assert!(!verify_rejected(&n, "aaaaa").unwrap());
    }

    #[test]
    fn unknown_symbol() {
        assert_eq!(
            verify_rejected(&star("a"), "ab"),
            Err(AutomataError::UnknownSymbol('b'))
        );
    }
}

use std::collections::{BTreeMap, BTreeSet};

use super::bitset::StateSet;
use super::AutomataError;
use crate::alphabet::Alphabet;

/// An epsilon-free nondeterministic automaton with states `0..state_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    state_count: usize,
    alphabet: Alphabet,
    initial: BTreeSet<usize>,
    accepting: BTreeSet<usize>,
    transitions: BTreeMap<(usize, char), BTreeSet<usize>>,
}

impl Nfa {
    pub fn new(state_count: usize, alphabet: Alphabet) -> Self {
        Nfa {
            state_count,
            alphabet,
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            transitions: BTreeMap::new(),
        }
    }

    fn check_state(&self, state: usize) -> Result<(), AutomataError> {
        if state < self.state_count {
            Ok(())
        } else {
            Err(AutomataError::StateOutOfRange {
                state,
                state_count: self.state_count,
            })
        }
    }

    pub fn add_initial(&mut self, state: usize) -> Result<(), AutomataError> {
        self.check_state(state)?;
        self.initial.insert(state);
        Ok(())
    }

    pub fn add_accepting(&mut self, state: usize) -> Result<(), AutomataError> {
        self.check_state(state)?;
        self.accepting.insert(state);
        Ok(())
    }

    pub fn add_transition(
        &mut self,
        from: usize,
        symbol: char,
        to: usize,
    ) -> Result<(), AutomataError> {
        self.check_state(from)?;
        self.check_state(to)?;
        if !self.alphabet.contains(symbol) {
            return Err(AutomataError::UnknownSymbol(symbol));
        }
        self.transitions
            .entry((from, symbol))
            .or_default()
            .insert(to);
        Ok(())
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<usize> {
        &self.accepting
    }

    pub fn successors(&self, state: usize, symbol: char) -> impl Iterator<Item = usize> + '_ {
        self.transitions
            .get(&(state, symbol))
            .into_iter()
            .flat_map(|set| set.iter().copied())
    }

    /// All transitions as `(from, symbol, to)`, ordered by source then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, char, usize)> + '_ {
        self.transitions
            .iter()
            .flat_map(|(&(p, a), targets)| targets.iter().map(move |&q| (p, a, q)))
    }

    /// Symbols that label at least one transition.
    pub fn used_symbols(&self) -> BTreeSet<char> {
        self.transitions.keys().map(|&(_, a)| a).collect()
    }

    /// Same automaton over a larger alphabet.
    pub fn with_alphabet(&self, alphabet: &Alphabet) -> Result<Nfa, AutomataError> {
        let missing = alphabet.missing_from(&self.alphabet);
        if !missing.is_empty() {
            return Err(AutomataError::AlphabetMismatch { missing });
        }
        Ok(Nfa {
            alphabet: alphabet.clone(),
            ..self.clone()
        })
    }

    pub(crate) fn symbol_index(&self, c: char) -> Result<usize, AutomataError> {
        self.alphabet
            .index_of(c)
            .ok_or(AutomataError::UnknownSymbol(c))
    }

    /// Successor sets per (state, symbol index) as bitsets.
    pub(crate) fn successor_table(&self) -> Vec<Vec<StateSet>> {
        let mut table =
            vec![vec![StateSet::new(self.state_count); self.alphabet.len()]; self.state_count];
        for (p, a, q) in self.transitions() {
            let k = self
                .alphabet
                .index_of(a)
                .expect("transition symbols are in the alphabet");
            table[p][k].insert(q);
        }
        table
    }

    /// Direct set-based simulation.
    pub fn accepts(&self, word: &str) -> Result<bool, AutomataError> {
        let mut current: BTreeSet<usize> = self.initial.clone();
        for c in word.chars() {
            self.symbol_index(c)?;
            current = current
                .iter()
                .flat_map(|&p| self.successors(p, c))
                .collect();
        }
        Ok(current.iter().any(|q| self.accepting.contains(q)))
    }

    /// Automaton for the Kleene closure of this automaton's language.
    ///
    /// A fresh accepting initial state receives copies of the out-transitions
    /// of the old initial states, and so does every old accepting state.
    pub fn star_closure(&self) -> Nfa {
        let fresh = self.state_count;
        let mut out = Nfa::new(self.state_count + 1, self.alphabet.clone());
        out.transitions = self.transitions.clone();
        out.accepting = self.accepting.clone();
        out.initial.insert(fresh);
        out.accepting.insert(fresh);
        let entry: Vec<(char, usize)> = self
            .transitions()
            .filter(|(p, _, _)| self.initial.contains(p))
            .map(|(_, a, q)| (a, q))
            .collect();
        let sources: Vec<usize> = std::iter::once(fresh)
            .chain(self.accepting.iter().copied())
            .collect();
        for p in sources {
            for &(a, q) in &entry {
                out.transitions.entry((p, a)).or_default().insert(q);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn validation() {
        let mut n = Nfa::new(2, ab());
        assert!(n.add_transition(0, 'a', 1).is_ok());
        assert_eq!(
            n.add_transition(0, 'c', 1),
            Err(AutomataError::UnknownSymbol('c'))
        );
        assert!(matches!(
            n.add_initial(2),
            Err(AutomataError::StateOutOfRange { state: 2, .. })
        ));
    }

    #[test]
    fn star_closure_does_not_leak_through_initial_loops() {
        // L = a(ba)*: the initial state is re-entered, so marking it accepting
        // would wrongly admit "ab".
        let mut n = Nfa::new(2, ab());
        n.add_initial(0).unwrap();
        n.add_accepting(1).unwrap();
        n.add_transition(0, 'a', 1).unwrap();
        n.add_transition(1, 'b', 0).unwrap();
        let s = n.star_closure();
        assert_eq!(s.state_count(), 3);
        for (w, expected) in [
            ("", true),
            ("a", true),
            ("ab", false),
            ("aa", true),
            ("aba", true),
            ("abaa", true),
            ("b", false),
        ] {
            assert_eq!(s.accepts(w).unwrap(), expected, "{w:?}");
        }
    }

    #[test]
    fn widening_the_alphabet() {
        let n = Nfa::new(1, Alphabet::parse("a").unwrap());
        assert!(n.with_alphabet(&ab()).is_ok());
        let wide = Nfa::new(1, ab());
        assert_eq!(
            wide.with_alphabet(&Alphabet::parse("a").unwrap()),
            Err(AutomataError::AlphabetMismatch { missing: vec!['b'] })
        );
        assert_eq!(n.accepts("b"), Err(AutomataError::UnknownSymbol('b')));
    }
}

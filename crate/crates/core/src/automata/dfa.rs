use std::collections::{HashMap, VecDeque};

use super::bitset::StateSet;
use super::nfa::Nfa;
use super::AutomataError;
use crate::alphabet::Alphabet;

/// A complete deterministic automaton. `transitions[q][k]` is the successor of
/// state `q` on the k-th alphabet symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    start: usize,
    accepting: Vec<bool>,
    transitions: Vec<Vec<usize>>,
}

impl Dfa {
    /// Assembles a DFA, checking that the transition table is total and in
    /// range.
    pub fn from_parts(
        alphabet: Alphabet,
        start: usize,
        accepting: Vec<bool>,
        transitions: Vec<Vec<usize>>,
    ) -> Result<Dfa, AutomataError> {
        let n = accepting.len();
        let check = |state: usize| {
            if state < n {
                Ok(())
            } else {
                Err(AutomataError::StateOutOfRange {
                    state,
                    state_count: n,
                })
            }
        };
        check(start)?;
        if transitions.len() != n {
            return Err(AutomataError::IncompleteDfa);
        }
        for row in &transitions {
            if row.len() != alphabet.len() {
                return Err(AutomataError::IncompleteDfa);
            }
            for &q in row {
                check(q)?;
            }
        }
        Ok(Dfa {
            alphabet,
            start,
            accepting,
            transitions,
        })
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn next(&self, state: usize, symbol_index: usize) -> usize {
        self.transitions[state][symbol_index]
    }

    pub fn accepts(&self, word: &str) -> Result<bool, AutomataError> {
        let mut q = self.start;
        for c in word.chars() {
            let k = self
                .alphabet
                .index_of(c)
                .ok_or(AutomataError::UnknownSymbol(c))?;
            q = self.transitions[q][k];
        }
        Ok(self.accepting[q])
    }

    /// Lexicographically smallest word of exactly `length` symbols accepted
    /// from the start state, found by walking forward through the sets of
    /// states that can still reach acceptance in the remaining steps.
    fn smallest_word_of_length(&self, length: usize) -> Option<String> {
        let n = self.state_count();
        let mut can_finish: Vec<Vec<bool>> = Vec::with_capacity(length + 1);
        can_finish.push(self.accepting.clone());
        for _ in 0..length {
            let after = can_finish.last().expect("non-empty");
            let layer: Vec<bool> = (0..n)
                .map(|q| self.transitions[q].iter().any(|&r| after[r]))
                .collect();
            can_finish.push(layer);
        }
        // can_finish[r][q]: some word of length r leads from q to acceptance
        if !can_finish[length][self.start] {
            return None;
        }
        let mut word = String::with_capacity(length);
        let mut q = self.start;
        for remaining in (0..length).rev() {
            let k = (0..self.alphabet.len())
                .find(|&k| can_finish[remaining][self.transitions[q][k]])
                .expect("a continuation exists by construction");
            word.push(self.alphabet.symbol(k));
            q = self.transitions[q][k];
        }
        Some(word)
    }
}

/// Determinizes `nfa` over `alphabet`, exploring reachable subsets only. The
/// empty subset appears as a non-accepting sink when it is reachable.
pub fn subset_construct(nfa: &Nfa, alphabet: &Alphabet) -> Result<Dfa, AutomataError> {
    let missing: Vec<char> = nfa
        .used_symbols()
        .into_iter()
        .filter(|&c| !alphabet.contains(c))
        .collect();
    if !missing.is_empty() {
        return Err(AutomataError::AlphabetMismatch { missing });
    }
    let table = nfa.successor_table();
    let column: Vec<Option<usize>> = alphabet
        .iter()
        .map(|c| nfa.alphabet().index_of(c))
        .collect();
    let mut accepting_set = StateSet::new(nfa.state_count());
    for &q in nfa.accepting() {
        accepting_set.insert(q);
    }
    let mut start = StateSet::new(nfa.state_count());
    for &q in nfa.initial() {
        start.insert(q);
    }

    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::new();
    index.insert(start.clone(), 0);
    subsets.push(start);
    queue.push_back(0);
    while let Some(d) = queue.pop_front() {
        let mut row = Vec::with_capacity(alphabet.len());
        for col in &column {
            let mut next = StateSet::new(nfa.state_count());
            if let Some(k) = *col {
                for p in subsets[d].iter() {
                    next.union_with(&table[p][k]);
                }
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
    }
    let accepting = subsets
        .iter()
        .map(|s| s.intersects(&accepting_set))
        .collect();
    Ok(Dfa {
        alphabet: alphabet.clone(),
        start: 0,
        accepting,
        transitions,
    })
}

/// Swaps accepting and non-accepting states.
pub fn complement(dfa: &Dfa) -> Dfa {
    Dfa {
        accepting: dfa.accepting.iter().map(|&a| !a).collect(),
        ..dfa.clone()
    }
}

/// States that are reachable from the start and can reach an accepting state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsefulStates {
    mask: Vec<bool>,
}

impl UsefulStates {
    pub fn contains(&self, state: usize) -> bool {
        self.mask[state]
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&m| m)
    }

    pub fn states(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(q, _)| q)
    }
}

pub fn trim_useful(dfa: &Dfa) -> UsefulStates {
    let n = dfa.state_count();
    let mut reachable = vec![false; n];
    let mut stack = vec![dfa.start];
    reachable[dfa.start] = true;
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n];
    while let Some(q) = stack.pop() {
        for &r in &dfa.transitions[q] {
            reverse[r].push(q);
            if !reachable[r] {
                reachable[r] = true;
                stack.push(r);
            }
        }
    }
    let mut coreachable = vec![false; n];
    let mut stack: Vec<usize> = (0..n)
        .filter(|&q| reachable[q] && dfa.accepting[q])
        .collect();
    for &q in &stack {
        coreachable[q] = true;
    }
    while let Some(q) = stack.pop() {
        for &p in &reverse[q] {
            if !coreachable[p] {
                coreachable[p] = true;
                stack.push(p);
            }
        }
    }
    UsefulStates {
        mask: (0..n).map(|q| reachable[q] && coreachable[q]).collect(),
    }
}

/// Topological order of the useful sub-automaton, or `None` if it has a cycle.
fn useful_topological_order(dfa: &Dfa, useful: &UsefulStates) -> Option<Vec<usize>> {
    let n = dfa.state_count();
    let edges: Vec<Vec<usize>> = (0..n)
        .map(|q| {
            if !useful.contains(q) {
                return Vec::new();
            }
            let mut targets: Vec<usize> = dfa.transitions[q]
                .iter()
                .copied()
                .filter(|&r| useful.contains(r))
                .collect();
            targets.sort_unstable();
            targets.dedup();
            targets
        })
        .collect();
    let mut indegree = vec![0usize; n];
    for targets in &edges {
        for &r in targets {
            indegree[r] += 1;
        }
    }
    let mut ready: Vec<usize> = useful.states().filter(|&q| indegree[q] == 0).collect();
    let mut order = Vec::with_capacity(useful.len());
    while let Some(q) = ready.pop() {
        order.push(q);
        for &r in &edges[q] {
            indegree[r] -= 1;
            if indegree[r] == 0 {
                ready.push(r);
            }
        }
    }
    (order.len() == useful.len()).then_some(order)
}

/// Trimmed state set and, when the trimmed automaton is acyclic, a
/// topological order of it. Computed once and shared by the finiteness
/// queries.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub useful: UsefulStates,
    order: Option<Vec<usize>>,
}

impl Analysis {
    pub fn new(dfa: &Dfa) -> Self {
        let useful = trim_useful(dfa);
        let order = useful_topological_order(dfa, &useful);
        Analysis { useful, order }
    }

    pub fn is_infinite(&self) -> bool {
        self.order.is_none()
    }

    /// [`longest_accepted`] reusing this analysis.
    pub fn longest_accepted(&self, dfa: &Dfa) -> Result<Option<(usize, String)>, AutomataError> {
        let useful = &self.useful;
        let order = self.order.as_ref().ok_or(AutomataError::InfiniteLanguage)?;
        if !useful.contains(dfa.start) {
            return Ok(None);
        }
        // longest[q]: length of the longest path from q to an accepting state
        let mut longest = vec![0usize; dfa.state_count()];
        for &q in order.iter().rev() {
            longest[q] = dfa.transitions[q]
                .iter()
                .filter(|&&r| useful.contains(r))
                .map(|&r| longest[r] + 1)
                .max()
                .unwrap_or(0);
        }
        let total = longest[dfa.start];
        let mut word = String::with_capacity(total);
        let mut q = dfa.start;
        for remaining in (0..total).rev() {
            let k = (0..dfa.alphabet.len())
                .find(|&k| {
                    let r = dfa.transitions[q][k];
                    useful.contains(r) && longest[r] == remaining
                })
                .expect("a maximal path continues");
            word.push(dfa.alphabet.symbol(k));
            q = dfa.transitions[q][k];
        }
        debug_assert!(dfa.accepting[q]);
        Ok(Some((total, word)))
    }
}

/// True iff the language is infinite, i.e. the trimmed automaton has a cycle.
pub fn is_infinite(dfa: &Dfa) -> bool {
    Analysis::new(dfa).is_infinite()
}

/// Smallest length in `lo..hi` at which some word is accepted, with the
/// lexicographically smallest accepted word of that length.
pub fn window_accepts(dfa: &Dfa, lo: usize, hi: usize) -> Option<(usize, String)> {
    let n = dfa.state_count();
    let mut layer = vec![false; n];
    layer[dfa.start] = true;
    for length in 0..hi {
        if length >= lo && (0..n).any(|q| layer[q] && dfa.accepting[q]) {
            let word = dfa
                .smallest_word_of_length(length)
                .expect("an accepting state is reachable at this length");
            return Some((length, word));
        }
        let mut next = vec![false; n];
        for q in (0..n).filter(|&q| layer[q]) {
            for &r in &dfa.transitions[q] {
                next[r] = true;
            }
        }
        layer = next;
    }
    None
}

/// Longest accepted word length, with the lexicographically smallest accepted
/// word of that length. `None` for the empty language.
pub fn longest_accepted(dfa: &Dfa) -> Result<Option<(usize, String)>, AutomataError> {
    Analysis::new(dfa).longest_accepted(dfa)
}

//! Brute-force ground truth that does not touch the automata code.
//!
//! Membership in L(E) is decided by a recursive span matcher over the syntax
//! tree, memoized per (end, start, node). Membership in L(E)* is the prefix
//! dynamic program: position 0 is reachable, and position j is reachable iff
//! some reachable i < j has `word[i..j]` in L(E).
//!
//! [`bruteforce_cofinite`] walks every word up to a horizon depth-first. The
//! memo rows for spans ending at depth d only depend on the first d letters,
//! so they stay valid while the walk is below d and are rebuilt when a new
//! letter is placed at position d.

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::regex::RegexAst;
use crate::verdict::CofiniteResult;

/// Default cap on the number of enumerated words.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumerating {words} words exceeds the budget of {budget}")]
    BudgetExceeded { words: u64, budget: u64 },
    #[error("the oracle needs a non-empty alphabet")]
    EmptyAlphabet,
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("symbol '{0}' of the expression is not in the alphabet")]
    SymbolOutsideAlphabet(char),
}

#[derive(Debug, Clone, Copy)]
enum Node {
    Empty,
    Eps,
    Sym(char),
    Union(usize, usize),
    Concat(usize, usize),
    Star(usize),
}

fn flatten(ast: &RegexAst, nodes: &mut Vec<Node>) -> usize {
    let node = match ast {
        RegexAst::EmptySet => Node::Empty,
        RegexAst::Epsilon => Node::Eps,
        RegexAst::Symbol(c) => Node::Sym(*c),
        RegexAst::Union(l, r) => Node::Union(flatten(l, nodes), flatten(r, nodes)),
        RegexAst::Concat(l, r) => Node::Concat(flatten(l, nodes), flatten(r, nodes)),
        RegexAst::Star(inner) => Node::Star(flatten(inner, nodes)),
    };
    nodes.push(node);
    nodes.len() - 1
}

const UNKNOWN: u8 = 0;
const NO: u8 = 1;
const YES: u8 = 2;

/// Span matcher over a growable word.
struct Matcher {
    nodes: Vec<Node>,
    root: usize,
    word: Vec<char>,
    // memo[end][start * nodes.len() + node]
    memo: Vec<Vec<u8>>,
}

impl Matcher {
    fn new(ast: &RegexAst) -> Self {
        let mut nodes = Vec::new();
        let root = flatten(ast, &mut nodes);
        let mut m = Matcher {
            nodes,
            root,
            word: Vec::new(),
            memo: Vec::new(),
        };
        m.reset_row(0);
        m
    }

    fn reset_row(&mut self, end: usize) {
        let width = (end + 1) * self.nodes.len();
        if self.memo.len() <= end {
            self.memo.resize_with(end + 1, Vec::new);
        }
        let row = &mut self.memo[end];
        row.clear();
        row.resize(width, UNKNOWN);
    }

    fn push(&mut self, c: char) {
        self.word.push(c);
        self.reset_row(self.word.len());
    }

    fn pop(&mut self) {
        self.word.pop();
    }

    /// Does `word[start..end]` belong to the language of `node`?
    fn matches(&mut self, node: usize, start: usize, end: usize) -> bool {
        let slot = start * self.nodes.len() + node;
        match self.memo[end][slot] {
            YES => return true,
            NO => return false,
            _ => {}
        }
        let result = match self.nodes[node] {
            Node::Empty => false,
            Node::Eps => start == end,
            Node::Sym(c) => end == start + 1 && self.word[start] == c,
            Node::Union(l, r) => self.matches(l, start, end) || self.matches(r, start, end),
            Node::Concat(l, r) => {
                (start..=end).any(|mid| self.matches(l, start, mid) && self.matches(r, mid, end))
            }
            Node::Star(inner) => {
                start == end
                    || (start + 1..=end)
                        .any(|mid| self.matches(inner, start, mid) && self.matches(node, mid, end))
            }
        };
        self.memo[end][slot] = if result { YES } else { NO };
        result
    }

    fn matches_whole(&mut self) -> bool {
        let len = self.word.len();
        self.matches(self.root, 0, len)
    }
}

/// True iff `word` belongs to L(ast).
pub fn regex_match(ast: &RegexAst, word: &str) -> bool {
    let mut m = Matcher::new(ast);
    for c in word.chars() {
        m.push(c);
    }
    m.matches_whole()
}

/// True iff `word` belongs to L(ast)*.
pub fn member_star_dp(ast: &RegexAst, word: &str) -> bool {
    let mut m = Matcher::new(ast);
    let mut reachable = vec![true];
    for c in word.chars() {
        m.push(c);
        let end = m.word.len();
        let root = m.root;
        let next = (0..end).any(|i| reachable[i] && m.matches(root, i, end));
        reachable.push(next);
    }
    reachable[reachable.len() - 1]
}

/// Missing words of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingLength {
    pub length: usize,
    pub count: u64,
    /// Lexicographically smallest missing word of this length.
    pub smallest: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub horizon: usize,
    pub bound: Option<usize>,
    pub missing: Vec<MissingLength>,
    pub conclusive: bool,
    pub verdict: Option<CofiniteResult>,
}

/// The worst-case window bound `2^(t+1)` for an expression with `t` symbol
/// occurrences; `None` if it does not fit in a `usize`.
pub fn fallback_bound(symbol_length: usize) -> Option<usize> {
    u32::try_from(symbol_length + 1)
        .ok()
        .and_then(|e| 1usize.checked_shl(e))
}

/// Smallest horizon that makes a report with `bound` conclusive.
pub fn conclusive_horizon(bound: usize) -> usize {
    (2 * bound).saturating_sub(1).max(1)
}

/// Number of words of length at most `horizon`, saturating.
pub fn word_count(alphabet_size: usize, horizon: usize) -> u64 {
    let k = alphabet_size as u64;
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=horizon {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(k);
    }
    total
}

struct Walk<'a> {
    matcher: Matcher,
    alphabet: &'a Alphabet,
    horizon: usize,
    reachable: Vec<bool>,
    missing: Vec<Option<MissingLength>>,
    prefix: String,
}

impl Walk<'_> {
    fn visit(&mut self) {
        let depth = self.matcher.word.len();
        if !self.reachable[depth] {
            let entry = self.missing[depth].get_or_insert_with(|| MissingLength {
                length: depth,
                count: 0,
                smallest: self.prefix.clone(),
            });
            entry.count += 1;
        }
        if depth == self.horizon {
            return;
        }
        for k in 0..self.alphabet.len() {
            let c = self.alphabet.symbol(k);
            self.matcher.push(c);
            self.prefix.push(c);
            let end = depth + 1;
            let root = self.matcher.root;
            let ok = (0..end).any(|i| self.reachable[i] && self.matcher.matches(root, i, end));
            self.reachable.push(ok);
            self.visit();
            self.reachable.pop();
            self.prefix.pop();
            self.matcher.pop();
        }
    }
}

/// Classifies every word of length at most `horizon` as in or out of
/// L(ast)*.
///
/// With a `bound` b (the state count of some DFA for the complement), the
/// report is conclusive once `horizon >= 2b - 1`: the closure is co-finite
/// iff no word of length b or more is missing.
pub fn bruteforce_cofinite(
    ast: &RegexAst,
    alphabet: &Alphabet,
    horizon: usize,
    bound: Option<usize>,
    budget: u64,
) -> Result<OracleReport, OracleError> {
    if alphabet.is_empty() {
        return Err(OracleError::EmptyAlphabet);
    }
    if horizon == 0 {
        return Err(OracleError::ZeroHorizon);
    }
    if let Some(c) = crate::regex::alphabet_of(ast)
        .iter()
        .find(|&c| !alphabet.contains(c))
    {
        return Err(OracleError::SymbolOutsideAlphabet(c));
    }
    let words = word_count(alphabet.len(), horizon);
    if words > budget {
        return Err(OracleError::BudgetExceeded { words, budget });
    }
    let mut walk = Walk {
        matcher: Matcher::new(ast),
        alphabet,
        horizon,
        reachable: vec![true],
        missing: vec![None; horizon + 1],
        prefix: String::new(),
    };
    walk.visit();
    let missing: Vec<MissingLength> = walk.missing.into_iter().flatten().collect();

    let conclusive = bound.is_some_and(|b| horizon + 1 >= 2 * b);
    let verdict = match bound {
        Some(b) if conclusive => Some(match missing.iter().find(|m| m.length >= b) {
            Some(m) => CofiniteResult::NotCofinite {
                length: m.length,
                witness: m.smallest.clone(),
            },
            None => {
                let last = missing.last();
                CofiniteResult::Cofinite {
                    frobenius_length: last.map(|m| m.length),
                    witness: last.map(|m| m.smallest.clone()),
                }
            }
        }),
        _ => None,
    };
    Ok(OracleReport {
        horizon,
        bound,
        missing,
        conclusive,
        verdict,
    })
}

//! From 3-CNF formulas to star-free expressions over `{F, T}` whose closure is
//! co-finite exactly when the formula is unsatisfiable.
//!
//! For clause c_i the expression e_i has one factor per variable u_j: `F` when
//! u_j occurs positively in c_i, `T` when it occurs negated, `(T+F)`
//! otherwise. So e_i matches precisely the assignments falsifying c_i, read
//! as words of length n. The full expression is
//! `e_1 + ... + e_m + (T+F)^n (T+F)`.

mod cnf;
mod dimacs;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::automata::AutomataError;
use crate::frobenius::frobenius_of_finite_set;
use crate::regex::RegexAst;

pub use cnf::{sat_bruteforce, Assignment, Clause, CnfInstance, Literal, MAX_BRUTEFORCE_VARIABLES};
pub use dimacs::parse_dimacs;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("DIMACS format error on line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("not 3-SAT: clause {clause} has {size} literals")]
    NotThreeSat { clause: usize, size: usize },
    #[error("not 3-SAT: clause {clause} contains both u{variable} and its negation")]
    Tautology { clause: usize, variable: usize },
    #[error("variable {0} does not occur in any clause")]
    UnusedVariable(usize),
    #[error("clause {clause} refers to variable {variable}, which is out of range")]
    VariableOutOfRange { clause: usize, variable: usize },
    #[error("the formula has no clauses")]
    NoClauses,
    #[error("{variables} variables exceed the brute-force limit of {MAX_BRUTEFORCE_VARIABLES}")]
    TooLarge { variables: usize },
    #[error("lemma lengths must satisfy 0 < m < n (got m = {m}, n = {n})")]
    InvalidLengths { m: usize, n: usize },
    #[error("word {word:?} has a length other than m or n")]
    BadLengths { word: String },
    #[error(transparent)]
    Automata(#[from] AutomataError),
}

/// The alphabet `{F, T}` of the reduction.
pub fn boolean_alphabet() -> Alphabet {
    Alphabet::new(['F', 'T']).expect("distinct symbols")
}

fn either() -> RegexAst {
    RegexAst::union(RegexAst::Symbol('T'), RegexAst::Symbol('F'))
}

/// Factor for variable `j` (1-based) in a clause.
fn factor(clause: &Clause, j: usize) -> RegexAst {
    match clause.iter().find(|lit| lit.variable() == j) {
        Some(lit) if lit.is_negated() => RegexAst::Symbol('T'),
        Some(_) => RegexAst::Symbol('F'),
        None => either(),
    }
}

pub fn cnf_to_regex(cnf: &CnfInstance) -> RegexAst {
    let n = cnf.variable_count();
    let clause_terms = cnf
        .clauses()
        .iter()
        .map(|clause| RegexAst::concat_all((1..=n).map(|j| factor(clause, j))));
    let all_words = RegexAst::concat(RegexAst::concat_all((0..n).map(|_| either())), either());
    RegexAst::union(RegexAst::union_all(clause_terms), all_words)
}

/// Symbol occurrences in [`cnf_to_regex`]'s output: each clause term has
/// `2n - d` symbols (d = distinct variables in the clause), and the tail
/// `(T+F)^(n+1)` has `2n + 2`. With three distinct variables per clause this
/// is `m(2n - 3) + 2n + 2`.
pub fn reduction_symbol_count(cnf: &CnfInstance) -> usize {
    let n = cnf.variable_count();
    let clause_part: usize = cnf
        .clauses()
        .iter()
        .map(|clause| {
            let distinct: BTreeSet<usize> = clause.iter().map(|l| l.variable()).collect();
            2 * n - distinct.len()
        })
        .sum();
    clause_part + 2 * n + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub cofinite: bool,
    pub sigma_m_subset: bool,
    /// A co-finite closure must contain every word of the shorter length.
    pub lemma_respected: bool,
}

/// Checks, on one instance, that `S ⊆ Σ^m ∪ Σ^n` with `S*` co-finite forces
/// `Σ^m ⊆ S`.
pub fn check_lemma<S: AsRef<str>>(
    words: &[S],
    m: usize,
    n: usize,
    alphabet: &Alphabet,
) -> Result<LemmaVerdict, ReductionError> {
    if m == 0 || m >= n {
        return Err(ReductionError::InvalidLengths { m, n });
    }
    let mut short = BTreeSet::new();
    for w in words {
        let w = w.as_ref();
        let len = w.chars().count();
        if len == m {
            short.insert(w);
        } else if len != n {
            return Err(ReductionError::BadLengths {
                word: w.to_string(),
            });
        }
    }
    let cofinite = frobenius_of_finite_set(words, alphabet)?
        .result
        .is_cofinite();
    let sigma_m_subset = u32::try_from(m)
        .ok()
        .and_then(|m| alphabet.len().checked_pow(m))
        .is_some_and(|total| short.len() == total);
    Ok(LemmaVerdict {
        cofinite,
        sigma_m_subset,
        lemma_respected: !cofinite || sigma_m_subset,
    })
}

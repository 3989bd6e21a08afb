//! Seeded instance generators for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::reduction::{Clause, CnfInstance, Literal};
use crate::regex::RegexAst;

/// Random expression with exactly `symbols` symbol occurrences drawn from
/// `alphabet`.
pub fn regex_with_symbols<R: Rng>(rng: &mut R, alphabet: &[char], symbols: usize) -> RegexAst {
    match symbols {
        0 => {
            if rng.gen_bool(0.75) {
                RegexAst::Epsilon
            } else {
                RegexAst::EmptySet
            }
        }
        1 => {
            let leaf = RegexAst::Symbol(*alphabet.choose(rng).expect("non-empty alphabet"));
            match rng.gen_range(0..10) {
                0..=1 => RegexAst::star(leaf),
                2 => RegexAst::union(leaf, RegexAst::Epsilon),
                _ => leaf,
            }
        }
        _ => match rng.gen_range(0..20) {
            0..=7 => {
                let left = rng.gen_range(1..symbols);
                RegexAst::union(
                    regex_with_symbols(rng, alphabet, left),
                    regex_with_symbols(rng, alphabet, symbols - left),
                )
            }
            8..=16 => {
                let left = rng.gen_range(1..symbols);
                RegexAst::concat(
                    regex_with_symbols(rng, alphabet, left),
                    regex_with_symbols(rng, alphabet, symbols - left),
                )
            }
            _ => RegexAst::star(regex_with_symbols(rng, alphabet, symbols)),
        },
    }
}

/// Random expression with at most `max_symbols` symbol occurrences.
pub fn random_regex<R: Rng>(rng: &mut R, alphabet: &[char], max_symbols: usize) -> RegexAst {
    let t = if max_symbols == 0 || rng.gen_bool(0.05) {
        0
    } else {
        rng.gen_range(1..=max_symbols)
    };
    regex_with_symbols(rng, alphabet, t)
}

fn random_clause<R: Rng>(rng: &mut R, variables: usize) -> Clause {
    let vars: Vec<usize> = rand::seq::index::sample(rng, variables, 3)
        .into_iter()
        .map(|v| v + 1)
        .collect();
    [0, 1, 2].map(|i| {
        if rng.gen_bool(0.5) {
            Literal::negative(vars[i])
        } else {
            Literal::positive(vars[i])
        }
    })
}

/// Random 3-CNF with `3 <= n <= max_variables` variables, at most
/// `max_clauses` clauses of three distinct variables, and every variable used.
pub fn random_cnf<R: Rng>(rng: &mut R, max_variables: usize, max_clauses: usize) -> CnfInstance {
    assert!(max_variables >= 3 && 3 * max_clauses >= max_variables);
    loop {
        let n = rng.gen_range(3..=max_variables);
        let m = rng.gen_range(n.div_ceil(3)..=max_clauses);
        let clauses: Vec<Clause> = (0..m).map(|_| random_clause(rng, n)).collect();
        if let Ok(cnf) = CnfInstance::new(n, clauses) {
            return cnf;
        }
    }
}

/// Every clause over `n` variables with three distinct variables, ordered by
/// variable triple and then sign pattern.
fn distinct_variable_clauses(n: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for signs in 0..8 {
                    let lit = |bit: u32, v: usize| {
                        if signs >> bit & 1 == 1 {
                            Literal::negative(v)
                        } else {
                            Literal::positive(v)
                        }
                    };
                    out.push([lit(2, a), lit(1, b), lit(0, c)]);
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, n - 1);
            out.push(q);
        }
    }
    out
}

fn normalize(mut clause: Clause) -> Clause {
    clause.sort_by_key(|l| l.variable());
    clause
}

/// One representative of every set of at most `max_clauses` distinct clauses
/// (three distinct variables each, all `n` variables used) up to renaming
/// variables and flipping polarities.
///
/// Sets are encoded as bitmasks over the clause list; a set is kept when no
/// symmetry maps it to a lexicographically smaller sorted clause list.
/// Removing the largest clause of a kept set yields a kept set, so extending
/// kept sets with larger clauses reaches every representative exactly once.
pub fn canonical_cnf_instances(n: usize, max_clauses: usize) -> Vec<CnfInstance> {
    let clauses = distinct_variable_clauses(n);
    assert!(
        clauses.len() <= 64,
        "bitmask encoding holds at most 64 clauses"
    );
    let position = |clause: Clause| {
        clauses
            .iter()
            .position(|&c| c == normalize(clause))
            .expect("symmetries map clauses to clauses")
    };
    let mut symmetries: Vec<Vec<usize>> = Vec::new();
    for perm in permutations(n) {
        for flips in 0..(1u32 << n) {
            let image = clauses
                .iter()
                .map(|clause| {
                    position(clause.map(|l| {
                        let v = perm[l.variable() - 1] + 1;
                        let negated = l.is_negated() != (flips >> (v - 1) & 1 == 1);
                        if negated {
                            Literal::negative(v)
                        } else {
                            Literal::positive(v)
                        }
                    }))
                })
                .collect();
            symmetries.push(image);
        }
    }
    let canonical = |mask: u64| {
        symmetries.iter().all(|image| {
            let mut mapped = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                mapped |= 1 << image[bit];
            }
            let diff = mapped ^ mask;
            diff == 0 || (diff & diff.wrapping_neg()) & mask != 0
        })
    };

    let mut kept: Vec<u64> = Vec::new();
    let mut frontier: Vec<(u64, usize)> = vec![(0, 0)];
    while let Some((mask, next)) = frontier.pop() {
        if mask.count_ones() as usize == max_clauses {
            continue;
        }
        for c in next..clauses.len() {
            let child = mask | 1 << c;
            if canonical(child) {
                kept.push(child);
                frontier.push((child, c + 1));
            }
        }
    }
    kept.sort_unstable_by_key(|&m| (m.count_ones(), m.reverse_bits()));
    kept.into_iter()
        .filter_map(|mask| {
            let chosen = (0..clauses.len())
                .filter(|&c| mask >> c & 1 == 1)
                .map(|c| clauses[c])
                .collect();
            CnfInstance::new(n, chosen).ok()
        })
        .collect()
}

/// Random word set `S ⊆ Σ^m ∪ Σ^n` over `alphabet` with `1 <= m < n <= max_n`.
pub fn random_lemma_sample<R: Rng>(
    rng: &mut R,
    alphabet: &[char],
    max_n: usize,
) -> (Vec<String>, usize, usize) {
    let m = rng.gen_range(1..max_n);
    let n = rng.gen_range(m + 1..=max_n);
    let words_of = |len: usize| {
        (0..len).fold(vec![String::new()], |acc, _| {
            acc.iter()
                .flat_map(|w| alphabet.iter().map(move |&c| format!("{w}{c}")))
                .collect::<Vec<_>>()
        })
    };
    let keep_short = if rng.gen_bool(0.5) {
        1.0
    } else {
        rng.gen_range(0.3..1.0)
    };
    let keep_long = if rng.gen_bool(0.4) {
        1.0
    } else {
        rng.gen_range(0.3..1.0)
    };
    let mut words = Vec::new();
    for w in words_of(m) {
        if rng.gen_bool(keep_short) {
            words.push(w);
        }
    }
    for w in words_of(n) {
        if rng.gen_bool(keep_long) {
            words.push(w);
        }
    }
    (words, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::symbol_length;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn regex_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for t in 0..8 {
            let e = regex_with_symbols(&mut rng, &['a', 'b'], t);
            assert_eq!(symbol_length(&e), t);
        }
        for _ in 0..100 {
            assert!(symbol_length(&random_regex(&mut rng, &['a'], 6)) <= 6);
        }
    }

    #[test]
    fn cnf_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let cnf = random_cnf(&mut rng, 6, 10);
            assert!((3..=6).contains(&cnf.variable_count()));
            assert!(cnf.clause_count() <= 10);
        }
    }

    #[test]
    fn orbit_counts_for_three_variables() {
        // With 8 clauses over one variable triple the symmetry group acts on
        // sign patterns like the cube's symmetries on its vertices, whose
        // orbit counts on k-subsets are 1, 1, 3, 3, 6, 3, 3, 1, 1.
        let instances = canonical_cnf_instances(3, 8);
        let mut by_size = [0usize; 9];
        for cnf in &instances {
            by_size[cnf.clause_count()] += 1;
        }
        assert_eq!(by_size, [0, 1, 3, 3, 6, 3, 3, 1, 1]);
    }

    #[test]
    fn lemma_samples_respect_lengths() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (words, m, n) = random_lemma_sample(&mut rng, &['a', 'b'], 5);
            assert!(1 <= m && m < n && n <= 5);
            assert!(words.iter().all(|w| w.len() == m || w.len() == n));
        }
    }
}

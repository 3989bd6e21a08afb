//! Seeded randomized self-checks that compare the automata pipeline against
//! the brute-force oracle and against simple invariants.
//!
//! Every suite draws its instances from its own ChaCha8 stream derived from
//! the seed, so a report depends only on `(seed, cases)`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::automata::{
    complement, glushkov, glushkov_star, subset_construct, trim_useful, verify_rejected,
    window_accepts, Analysis, Dfa, Nfa, ReachabilityMatrix,
};
use crate::frobenius::{decide_cofinite, frobenius_of_finite_set, StarInput};
use crate::gen::{random_cnf, random_lemma_sample, random_regex};
use crate::numeric::{gcd_u64, numeric_frobenius};
use crate::oracle::{
    bruteforce_cofinite, conclusive_horizon, member_star_dp, regex_match, OracleError,
};
use crate::reduction::{
    boolean_alphabet, check_lemma, cnf_to_regex, reduction_symbol_count, sat_bruteforce,
};
use crate::regex::{symbol_length, RegexAst};

/// Word budget for a single oracle run inside the self-test.
pub const SELFTEST_ORACLE_BUDGET: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub cases: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

type Case = fn(&mut ChaCha8Rng) -> Outcome;

const SUITES: [(&str, Case); 8] = [
    ("state_bound_and_language", state_bound_and_language),
    ("oracle_agreement", oracle_agreement),
    ("window_criterion", window_criterion),
    ("matrix_verifier", matrix_verifier),
    ("reduction_equivalence", reduction_equivalence),
    ("lemma", lemma),
    ("numeric", numeric),
    ("complement_involution", complement_involution),
];

/// Runs every suite with `cases` instances each.
pub fn run_selftest(seed: u64, cases: usize) -> SelftestReport {
    let suites: Vec<SuiteReport> = SUITES
        .iter()
        .enumerate()
        .map(|(i, &(name, case))| {
            let stream = seed ^ (i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            let mut rng = ChaCha8Rng::seed_from_u64(stream);
            let mut report = SuiteReport {
                name,
                passed: 0,
                failed: 0,
                skipped: 0,
                first_failure: None,
            };
            for index in 0..cases {
                match case(&mut rng) {
                    Outcome::Pass => report.passed += 1,
                    Outcome::Skip => report.skipped += 1,
                    Outcome::Fail(message) => {
                        report.failed += 1;
                        report
                            .first_failure
                            .get_or_insert_with(|| format!("case {index}: {message}"));
                    }
                }
            }
            report
        })
        .collect();
    let passed = suites.iter().all(|s| s.failed == 0);
    SelftestReport {
        seed,
        cases,
        suites,
        passed,
    }
}

fn words_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<String> {
    let mut all = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn random_alphabet(rng: &mut ChaCha8Rng) -> Alphabet {
    let text = if rng.gen_bool(0.5) { "a" } else { "ab" };
    Alphabet::parse(text).expect("valid alphabet")
}

fn regex_instance(rng: &mut ChaCha8Rng, max_symbols: usize) -> (RegexAst, Alphabet) {
    let alphabet = random_alphabet(rng);
    let ast = random_regex(rng, alphabet.symbols(), max_symbols);
    (ast, alphabet)
}

fn closure_over(ast: &RegexAst, alphabet: &Alphabet) -> Nfa {
    glushkov_star(ast)
        .with_alphabet(alphabet)
        .expect("generated expressions stay inside their alphabet")
}

fn state_bound_and_language(rng: &mut ChaCha8Rng) -> Outcome {
    let (ast, alphabet) = regex_instance(rng, 6);
    let t = symbol_length(&ast);
    let nfa = glushkov_star(&ast);
    if nfa.state_count() != t + 1 {
        return Outcome::Fail(format!("{ast}: {} states, t = {t}", nfa.state_count()));
    }
    let nfa = closure_over(&ast, &alphabet);
    let dfa = subset_construct(&nfa, &alphabet).expect("alphabet matches");
    let plain = glushkov(&ast)
        .with_alphabet(&alphabet)
        .expect("generated expressions stay inside their alphabet");
    for w in words_up_to(&alphabet, 6) {
        let matched = regex_match(&ast, &w);
        if plain.accepts(&w).expect("word over the alphabet") != matched {
            return Outcome::Fail(format!("{ast} on {w:?}: matcher says {matched}"));
        }
        let expected = member_star_dp(&ast, &w);
        let by_nfa = nfa.accepts(&w).expect("word over the alphabet");
        let by_dfa = dfa.accepts(&w).expect("word over the alphabet");
        if by_nfa != expected || by_dfa != expected {
            return Outcome::Fail(format!(
                "{ast} on {w:?}: oracle {expected}, nfa {by_nfa}, dfa {by_dfa}"
            ));
        }
    }
    Outcome::Pass
}

fn oracle_agreement(rng: &mut ChaCha8Rng) -> Outcome {
    let (ast, alphabet) = regex_instance(rng, 6);
    let decision = decide_cofinite(StarInput::Regex(&ast), Some(&alphabet))
        .expect("generated expressions stay inside their alphabet");
    let bound = decision.complement_useful_states;
    let horizon = conclusive_horizon(bound);
    let report = match bruteforce_cofinite(
        &ast,
        &alphabet,
        horizon,
        Some(bound),
        SELFTEST_ORACLE_BUDGET,
    ) {
        Ok(report) => report,
        Err(OracleError::BudgetExceeded { .. }) => return Outcome::Skip,
        Err(e) => return Outcome::Fail(format!("{ast}: oracle error {e}")),
    };
    if report.verdict.as_ref() != Some(&decision.result) {
        return Outcome::Fail(format!(
            "{ast} over {alphabet}: decide {:?}, oracle {:?}",
            decision.result, report.verdict
        ));
    }
    Outcome::Pass
}

fn random_dfa(rng: &mut ChaCha8Rng) -> Dfa {
    let alphabet = random_alphabet(rng);
    let n = rng.gen_range(1..=6);
    let accepting = (0..n).map(|_| rng.gen_bool(0.3)).collect();
    let transitions = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    Dfa::from_parts(alphabet, 0, accepting, transitions).expect("well-formed table")
}

fn window_criterion(rng: &mut ChaCha8Rng) -> Outcome {
    let dfa = if rng.gen_bool(0.5) {
        let (ast, alphabet) = regex_instance(rng, 6);
        complement(&subset_construct(&closure_over(&ast, &alphabet), &alphabet).expect("alphabet"))
    } else {
        random_dfa(rng)
    };
    let analysis = Analysis::new(&dfa);
    let useful = analysis.useful.len();
    let in_window = window_accepts(&dfa, useful, 2 * useful);
    if analysis.is_infinite() != in_window.is_some() {
        return Outcome::Fail(format!(
            "infinite = {}, window [{useful}, {}) = {in_window:?}",
            analysis.is_infinite(),
            2 * useful
        ));
    }
    // An accepted word of length in [N, 2N), N = all states, exists iff the
    // language is infinite; checked by enumeration for small automata.
    let n = dfa.state_count();
    if dfa.alphabet().len().pow(2 * n as u32) <= 1 << 12 {
        let pumpable = words_up_to(dfa.alphabet(), 2 * n - 1)
            .iter()
            .any(|w| w.len() >= n && dfa.accepts(w).expect("word over the alphabet"));
        if pumpable != analysis.is_infinite() {
            return Outcome::Fail(format!(
                "enumeration finds a word in [{n}, {}) = {pumpable}, infinite = {}",
                2 * n,
                analysis.is_infinite()
            ));
        }
    }
    Outcome::Pass
}

fn matrix_verifier(rng: &mut ChaCha8Rng) -> Outcome {
    let (ast, alphabet) = regex_instance(rng, 6);
    let nfa = closure_over(&ast, &alphabet);
    let words = words_up_to(&alphabet, 6);
    for w in &words {
        let rejected = verify_rejected(&nfa, w).expect("word over the alphabet");
        if rejected == member_star_dp(&ast, w) {
            return Outcome::Fail(format!("{ast} on {w:?}: verify_rejected = {rejected}"));
        }
    }
    let w = &words[rng.gen_range(0..words.len())];
    let m = ReachabilityMatrix::after_word(&nfa, w).expect("word over the alphabet");
    for p in 0..nfa.state_count() {
        let mut reached = vec![false; nfa.state_count()];
        reached[p] = true;
        for c in w.chars() {
            let mut next = vec![false; nfa.state_count()];
            for q in (0..reached.len()).filter(|&q| reached[q]) {
                for r in nfa.successors(q, c) {
                    next[r] = true;
                }
            }
            reached = next;
        }
        if (0..reached.len()).any(|q| reached[q] != m.get(p, q)) {
            return Outcome::Fail(format!("{ast}: matrix row {p} for {w:?}"));
        }
    }
    Outcome::Pass
}

fn reduction_equivalence(rng: &mut ChaCha8Rng) -> Outcome {
    let cnf = random_cnf(rng, 5, 8);
    let e = cnf_to_regex(&cnf);
    if symbol_length(&e) != reduction_symbol_count(&cnf) {
        return Outcome::Fail(format!("symbol count of\n{}", cnf.to_dimacs()));
    }
    let decision = decide_cofinite(StarInput::Regex(&e), Some(&boolean_alphabet()))
        .expect("reduction output uses {F, T}");
    let sat = sat_bruteforce(&cnf).expect("few variables");
    if decision.result.is_cofinite() != sat.is_none() {
        return Outcome::Fail(format!(
            "satisfiable = {}, verdict {:?}\n{}",
            sat.is_some(),
            decision.result,
            cnf.to_dimacs()
        ));
    }
    if let Some(assignment) = sat {
        let word: String = assignment
            .0
            .iter()
            .map(|&v| if v { 'T' } else { 'F' })
            .collect();
        if member_star_dp(&e, &word) {
            return Outcome::Fail(format!("satisfying word {word} is in the closure"));
        }
    }
    Outcome::Pass
}

fn lemma(rng: &mut ChaCha8Rng) -> Outcome {
    let alphabet = Alphabet::parse("ab").expect("valid alphabet");
    let (words, m, n) = random_lemma_sample(rng, alphabet.symbols(), 5);
    match check_lemma(&words, m, n, &alphabet) {
        Ok(v) if v.lemma_respected => Outcome::Pass,
        Ok(v) => Outcome::Fail(format!("m = {m}, n = {n}, {words:?}: {v:?}")),
        Err(e) => Outcome::Fail(e.to_string()),
    }
}

fn numeric(rng: &mut ChaCha8Rng) -> Outcome {
    let xs: Vec<u64> = loop {
        let k = rng.gen_range(1..=4);
        let xs: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=15)).collect();
        if xs.iter().fold(0, |g, &x| gcd_u64(g, x)) == 1 {
            break xs;
        }
    };
    let g = match numeric_frobenius(&xs) {
        Ok(r) => r.g,
        Err(e) => return Outcome::Fail(format!("{xs:?}: {e}")),
    };
    let unary = Alphabet::parse("a").expect("valid alphabet");
    let words: Vec<String> = xs.iter().map(|&x| "a".repeat(x as usize)).collect();
    let decision = frobenius_of_finite_set(&words, &unary).expect("unary words");
    let expected = usize::try_from(g).ok();
    if !decision.result.is_cofinite() || decision.result.frobenius_length() != expected {
        return Outcome::Fail(format!("{xs:?}: g = {g}, unary {:?}", decision.result));
    }
    Outcome::Pass
}

fn complement_involution(rng: &mut ChaCha8Rng) -> Outcome {
    let dfa = if rng.gen_bool(0.5) {
        let (ast, alphabet) = regex_instance(rng, 6);
        subset_construct(&closure_over(&ast, &alphabet), &alphabet).expect("alphabet")
    } else {
        random_dfa(rng)
    };
    let twice = complement(&complement(&dfa));
    if twice != dfa {
        return Outcome::Fail("complement is not an involution".into());
    }
    let once = complement(&dfa);
    if trim_useful(&dfa).is_empty() && trim_useful(&once).is_empty() {
        return Outcome::Fail("a language and its complement are both empty".into());
    }
    for w in words_up_to(dfa.alphabet(), 5) {
        let a = dfa.accepts(&w).expect("word over the alphabet");
        let b = once.accepts(&w).expect("word over the alphabet");
        if a == b {
            return Outcome::Fail(format!("{w:?} accepted by both or neither"));
        }
    }
    Outcome::Pass
}

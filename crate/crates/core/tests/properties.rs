use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use star_frobenius::automata::{
    complement, format_nfa, glushkov, glushkov_star, parse_nfa, subset_construct, Dfa,
};
use star_frobenius::frobenius::{decide_cofinite, length_spectrum, StarInput};
use star_frobenius::gen::random_regex;
use star_frobenius::numeric::{minimal_generators, numeric_frobenius};
use star_frobenius::oracle::member_star_dp;
use star_frobenius::{parse_regex, symbol_length, Alphabet, CofiniteResult, RegexAst};

// Letters that spell the EPS / EMPTY keywords exercise the printer's spacing.
const PRINT_SYMBOLS: &[char] = &['a', 'b', 'E', 'P', 'S', 'M', 'T', 'Y'];

fn arbitrary_regex(symbols: &'static [char]) -> impl Strategy<Value = RegexAst> {
    let leaf = prop_oneof![
        1 => Just(RegexAst::Epsilon),
        1 => Just(RegexAst::EmptySet),
        6 => prop::sample::select(symbols).prop_map(RegexAst::Symbol),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RegexAst::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| RegexAst::concat(a, b)),
            inner.prop_map(RegexAst::star),
        ]
    })
}

/// A generated expression with at most six symbol occurrences.
fn small_regex(seed: u64, alphabet: &Alphabet) -> RegexAst {
    random_regex(&mut ChaCha8Rng::seed_from_u64(seed), alphabet.symbols(), 6)
}

fn ab() -> Alphabet {
    Alphabet::parse("ab").unwrap()
}

/// DFA for the words missing from E* over `alphabet`.
fn missing_dfa(ast: &RegexAst, alphabet: &Alphabet) -> Dfa {
    let nfa = glushkov_star(ast).with_alphabet(alphabet).unwrap();
    complement(&subset_construct(&nfa, alphabet).unwrap())
}

fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<String> {
    (0..len).fold(vec![String::new()], |acc, _| {
        acc.iter()
            .flat_map(|w| alphabet.iter().map(move |c| format!("{w}{c}")))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(e in arbitrary_regex(PRINT_SYMBOLS)) {
        let printed = e.to_string();
        let reparsed = parse_regex(&printed).unwrap();
        prop_assert_eq!(&reparsed, &e, "printed as {}", printed);
        prop_assert_eq!(reparsed.to_string(), printed);
    }

    #[test]
    fn symbol_length_is_additive(
        a in arbitrary_regex(PRINT_SYMBOLS),
        b in arbitrary_regex(PRINT_SYMBOLS),
    ) {
        let (la, lb) = (symbol_length(&a), symbol_length(&b));
        prop_assert_eq!(symbol_length(&RegexAst::union(a.clone(), b.clone())), la + lb);
        prop_assert_eq!(symbol_length(&RegexAst::concat(a.clone(), b)), la + lb);
        prop_assert_eq!(symbol_length(&RegexAst::star(a)), la);
    }

    #[test]
    fn nfa_text_round_trip(e in arbitrary_regex(&['a', 'b', 'c'])) {
        for nfa in [glushkov(&e), glushkov_star(&e)] {
            let text = format_nfa(&nfa);
            prop_assert_eq!(parse_nfa(&text).unwrap(), nfa);
        }
    }

    #[test]
    fn unary_consistency(seed in any::<u64>()) {
        let a = Alphabet::parse("a").unwrap();
        let e = small_regex(seed, &a);
        let d = decide_cofinite(StarInput::Regex(&e), Some(&a)).unwrap();
        let spectrum = length_spectrum(StarInput::Regex(&e), 200);
        prop_assert_eq!(d.result.is_cofinite(), spectrum.gcd == 1, "{}", e);
        if spectrum.gcd == 1 {
            let generators: Vec<u64> = minimal_generators(&spectrum.lengths)
                .into_iter()
                .map(|x| x as u64)
                .collect();
            let g = numeric_frobenius(&generators).unwrap().g;
            prop_assert_eq!(d.result.frobenius_length(), usize::try_from(g).ok(), "{}", e);
        }
    }

    #[test]
    fn frobenius_length_is_maximal(seed in any::<u64>()) {
        let e = small_regex(seed, &ab());
        let d = decide_cofinite(StarInput::Regex(&e), Some(&ab())).unwrap();
        if let CofiniteResult::Cofinite { frobenius_length: Some(l), witness: Some(w) } = &d.result {
            prop_assert_eq!(w.chars().count(), *l);
            prop_assert!(!member_star_dp(&e, w));
            let missing = missing_dfa(&e, &ab());
            let mut layer = vec![false; missing.state_count()];
            layer[missing.start()] = true;
            for length in 1..=l + d.complement_useful_states {
                let mut next = vec![false; layer.len()];
                for q in (0..layer.len()).filter(|&q| layer[q]) {
                    for k in 0..missing.alphabet().len() {
                        next[missing.next(q, k)] = true;
                    }
                }
                layer = next;
                if length > *l {
                    prop_assert!(
                        (0..layer.len()).all(|q| !layer[q] || !missing.is_accepting(q)),
                        "{} misses a word of length {}", e, length
                    );
                }
            }
        }
    }

    #[test]
    fn not_cofinite_witness_pumps(seed in any::<u64>()) {
        let e = small_regex(seed, &ab());
        let d = decide_cofinite(StarInput::Regex(&e), Some(&ab())).unwrap();
        if let CofiniteResult::NotCofinite { length, witness } = &d.result {
            prop_assert!(*length >= d.complement_useful_states);
            prop_assert!(!member_star_dp(&e, witness));
            // Its path through the complement DFA repeats a state; repeating
            // the loop between the two visits keeps the word missing.
            let missing = missing_dfa(&e, &ab());
            let letters: Vec<char> = witness.chars().collect();
            let mut path = vec![missing.start()];
            for &c in &letters {
                let q = *path.last().unwrap();
                path.push(missing.next(q, missing.alphabet().index_of(c).unwrap()));
            }
            let (i, j) = (0..path.len())
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .find(|&(i, j)| path[i] == path[j])
                .expect("the path is longer than the useful state count");
            let (x, y, z): (String, String, String) = (
                letters[..i].iter().collect(),
                letters[i..j].iter().collect(),
                letters[j..].iter().collect(),
            );
            for k in 1..=3 {
                let pumped = format!("{x}{}{z}", y.repeat(k + 1));
                prop_assert!(!member_star_dp(&e, &pumped), "{} accepts {}", e, pumped);
            }
        }
    }

    #[test]
    fn closure_is_closed_under_concatenation(seed in any::<u64>(), picks in prop::collection::vec(any::<prop::sample::Index>(), 8)) {
        let e = small_regex(seed, &ab());
        let members: Vec<String> = (0..=5)
            .flat_map(|len| words_of_length(&ab(), len))
            .filter(|w| member_star_dp(&e, w))
            .collect();
        for pair in picks.chunks(2) {
            let w = pair[0].get(&members);
            let v = pair[1].get(&members);
            prop_assert!(member_star_dp(&e, &format!("{w}{v}")), "{}: {} . {}", e, w, v);
        }
    }
}

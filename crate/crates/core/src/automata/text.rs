//! Line-based NFA text format.
//!
//! ```text
//! # L = a(ba)*
//! states 2
//! alphabet ab
//! initial 0
//! accepting 1
//! 0 a 1
//! 1 b 0
//! ```
//!
//! * Lines are trimmed; blank lines and lines starting with `#` are skipped.
//! * `states N` and `alphabet ...` are required, `initial ...` and
//!   `accepting ...` are optional (default: no states). Each directive may
//!   appear at most once, in any order.
//! * After `alphabet` every non-whitespace character is one symbol, so
//!   `alphabet ab` and `alphabet a b` are equivalent.
//! * Any other line is a transition `p a q` of exactly three tokens.

use std::fmt::Write as _;

use thiserror::Error;

use super::nfa::Nfa;
use crate::alphabet::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("NFA format error on line {line}: {message}")]
pub struct NfaFormatError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> NfaFormatError {
    NfaFormatError {
        line,
        message: message.into(),
    }
}

fn state_id(token: &str, line: usize) -> Result<usize, NfaFormatError> {
    token
        .parse()
        .map_err(|_| err(line, format!("expected a state number, found {token:?}")))
}

pub fn parse_nfa(text: &str) -> Result<Nfa, NfaFormatError> {
    let mut states: Option<(usize, usize)> = None;
    let mut alphabet: Option<(Alphabet, usize)> = None;
    let mut initial: Option<(Vec<usize>, usize)> = None;
    let mut accepting: Option<(Vec<usize>, usize)> = None;
    let mut transitions: Vec<(usize, usize, char, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("line is non-empty");
        let rest: Vec<&str> = tokens.collect();
        let once = |seen: bool, name: &str| {
            if seen {
                Err(err(line_no, format!("duplicate '{name}' directive")))
            } else {
                Ok(())
            }
        };
        match head {
            "states" => {
                once(states.is_some(), head)?;
                let [n] = rest[..] else {
                    return Err(err(line_no, "'states' takes exactly one number"));
                };
                states = Some((state_id(n, line_no)?, line_no));
            }
            "alphabet" => {
                once(alphabet.is_some(), head)?;
                let a = Alphabet::new(rest.iter().flat_map(|t| t.chars()))
                    .map_err(|e| err(line_no, e.to_string()))?;
                alphabet = Some((a, line_no));
            }
            "initial" | "accepting" => {
                let ids = rest
                    .iter()
                    .map(|t| state_id(t, line_no))
                    .collect::<Result<Vec<_>, _>>()?;
                let slot = if head == "initial" {
                    &mut initial
                } else {
                    &mut accepting
                };
                once(slot.is_some(), head)?;
                *slot = Some((ids, line_no));
            }
            _ => {
                let [a, q] = rest[..] else {
                    return Err(err(line_no, "expected a transition 'p a q'"));
                };
                let p = head;
                let mut chars = a.chars();
                let (Some(symbol), None) = (chars.next(), chars.next()) else {
                    return Err(err(
                        line_no,
                        format!("transition symbol {a:?} is not a single character"),
                    ));
                };
                transitions.push((
                    line_no,
                    state_id(p, line_no)?,
                    symbol,
                    state_id(q, line_no)?,
                ));
            }
        }
    }

    let (state_count, _) = states.ok_or_else(|| err(0, "missing 'states' directive"))?;
    let (alphabet, _) = alphabet.ok_or_else(|| err(0, "missing 'alphabet' directive"))?;
    let mut nfa = Nfa::new(state_count, alphabet);
    if let Some((ids, line)) = initial {
        for q in ids {
            nfa.add_initial(q).map_err(|e| err(line, e.to_string()))?;
        }
    }
    if let Some((ids, line)) = accepting {
        for q in ids {
            nfa.add_accepting(q).map_err(|e| err(line, e.to_string()))?;
        }
    }
    for (line, p, a, q) in transitions {
        nfa.add_transition(p, a, q)
            .map_err(|e| err(line, e.to_string()))?;
    }
    Ok(nfa)
}

/// Canonical text form; `parse_nfa(&format_nfa(n)) == n`.
pub fn format_nfa(nfa: &Nfa) -> String {
    let join =
        |ids: &mut dyn Iterator<Item = usize>| ids.map(|q| format!(" {q}")).collect::<String>();
    let mut out = String::new();
    writeln!(out, "states {}", nfa.state_count()).unwrap();
    writeln!(out, "alphabet {}", nfa.alphabet()).unwrap();
    writeln!(out, "initial{}", join(&mut nfa.initial().iter().copied())).unwrap();
    writeln!(
        out,
        "accepting{}",
        join(&mut nfa.accepting().iter().copied())
    )
    .unwrap();
    for (p, a, q) in nfa.transitions() {
        writeln!(out, "{p} {a} {q}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str =
        "# L = a(ba)*\nstates 2\nalphabet a b\ninitial 0\naccepting 1\n\n0 a 1\n  1 b 0  \n";

    #[test]
    fn parses_sample() {
        let n = parse_nfa(SAMPLE).unwrap();
        assert_eq!(n.state_count(), 2);
        assert_eq!(n.alphabet().symbols(), &['a', 'b']);
        assert_eq!(
            n.transitions().collect::<Vec<_>>(),
            vec![(0, 'a', 1), (1, 'b', 0)]
        );
        assert!(n.accepts("aba").unwrap());
        assert_eq!(parse_nfa(&format_nfa(&n)).unwrap(), n);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_nfa("states 2\nalphabet a\n0 b 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_nfa("states 2\nalphabet a\n0 a\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_nfa("states 2\nstates 3\nalphabet a\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_nfa("alphabet a\n").unwrap_err();
        assert!(e.message.contains("states"));
        let e = parse_nfa("states 1\nalphabet a\ninitial 4\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_nfa("states 1\nalphabet a\n0 ab 0\n").unwrap_err();
        assert_eq!(e.line, 3);
    }
}

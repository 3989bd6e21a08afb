//! Position (Glushkov) automata.
//!
//! State 0 is the initial state and state `i` (for `1 <= i <= t`) stands for
//! the i-th symbol occurrence of the expression, counted left to right. The
//! result never has epsilon transitions and always has exactly `t + 1` states.

use std::collections::BTreeSet;

use super::nfa::Nfa;
use crate::regex::{alphabet_of, RegexAst};

struct Positions {
    labels: Vec<char>,
    follow: Vec<BTreeSet<usize>>,
}

struct Summary {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

impl Positions {
    fn visit(&mut self, ast: &RegexAst) -> Summary {
        match ast {
            RegexAst::EmptySet => Summary {
                nullable: false,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            RegexAst::Epsilon => Summary {
                nullable: true,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            RegexAst::Symbol(c) => {
                self.labels.push(*c);
                self.follow.push(BTreeSet::new());
                let p = self.labels.len();
                Summary {
                    nullable: false,
                    first: BTreeSet::from([p]),
                    last: BTreeSet::from([p]),
                }
            }
            RegexAst::Union(l, r) => {
                let l = self.visit(l);
                let r = self.visit(r);
                Summary {
                    nullable: l.nullable || r.nullable,
                    first: &l.first | &r.first,
                    last: &l.last | &r.last,
                }
            }
            RegexAst::Concat(l, r) => {
                let l = self.visit(l);
                let r = self.visit(r);
                for &p in &l.last {
                    self.follow[p - 1].extend(r.first.iter().copied());
                }
                Summary {
                    nullable: l.nullable && r.nullable,
                    first: if l.nullable {
                        &l.first | &r.first
                    } else {
                        l.first
                    },
                    last: if r.nullable {
                        &l.last | &r.last
                    } else {
                        r.last
                    },
                }
            }
            RegexAst::Star(inner) => {
                let s = self.visit(inner);
                self.close_loop(&s);
                Summary {
                    nullable: true,
                    ..s
                }
            }
        }
    }

    fn close_loop(&mut self, s: &Summary) {
        for &p in &s.last {
            self.follow[p - 1].extend(s.first.iter().copied());
        }
    }

    fn into_nfa(self, ast: &RegexAst, top: &Summary, accept_initial: bool) -> Nfa {
        let mut nfa = Nfa::new(self.labels.len() + 1, alphabet_of(ast));
        let label = |q: usize| self.labels[q - 1];
        nfa.add_initial(0).expect("state 0 exists");
        if accept_initial {
            nfa.add_accepting(0).expect("state 0 exists");
        }
        for &p in &top.last {
            nfa.add_accepting(p).expect("position in range");
        }
        for &q in &top.first {
            nfa.add_transition(0, label(q), q)
                .expect("position in range");
        }
        for (i, targets) in self.follow.iter().enumerate() {
            for &q in targets {
                nfa.add_transition(i + 1, label(q), q)
                    .expect("position in range");
            }
        }
        nfa
    }
}

fn positions(ast: &RegexAst) -> (Positions, Summary) {
    let mut pos = Positions {
        labels: Vec::new(),
        follow: Vec::new(),
    };
    let summary = pos.visit(ast);
    (pos, summary)
}

/// Position automaton recognising L(ast).
pub fn glushkov(ast: &RegexAst) -> Nfa {
    let (pos, top) = positions(ast);
    let nullable = top.nullable;
    pos.into_nfa(ast, &top, nullable)
}

/// Position automaton recognising L(ast)*: last positions loop back to the
/// first positions and the initial state accepts.
pub fn glushkov_star(ast: &RegexAst) -> Nfa {
    let (mut pos, top) = positions(ast);
    pos.close_loop(&top);
    pos.into_nfa(ast, &top, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::parse_regex;

    fn star(text: &str) -> Nfa {
        glushkov_star(&parse_regex(text).unwrap())
    }

    #[test]
    fn a_star_shape() {
        let n = star("a");
        assert_eq!(n.state_count(), 2);
        assert!(n.accepting().contains(&0));
        assert_eq!(
            n.transitions().collect::<Vec<_>>(),
            vec![(0, 'a', 1), (1, 'a', 1)]
        );
    }

    #[test]
    fn empty_set_star_is_epsilon_only() {
        let n = star("∅");
        assert_eq!(n.state_count(), 1);
        assert!(n.accepts("").unwrap());
        assert_eq!(n.transitions().count(), 0);
    }

    #[test]
    fn two_or_three() {
        let n = star("aa+aaa");
        assert_eq!(n.state_count(), 6);
        let accepted: Vec<usize> = (0..=10)
            .filter(|&k| n.accepts(&"a".repeat(k)).unwrap())
            .collect();
        assert_eq!(accepted, vec![0, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn plain_position_automaton() {
        let n = glushkov(&parse_regex("a(b+ε)*").unwrap());
        for (w, expected) in [
            ("", false),
            ("a", true),
            ("ab", true),
            ("abb", true),
            ("b", false),
            ("aa", false),
        ] {
            assert_eq!(n.accepts(w).unwrap(), expected, "{w:?}");
        }
        let n = glushkov(&parse_regex("ε+a").unwrap());
        assert!(n.accepts("").unwrap());
    }
}

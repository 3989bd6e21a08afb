//! DIMACS CNF reader restricted to 3-CNF.

use super::cnf::{Clause, CnfInstance, Literal};
use super::ReductionError;

fn format_err(line: usize, message: impl Into<String>) -> ReductionError {
    ReductionError::Format {
        line,
        message: message.into(),
    }
}

/// Parses `p cnf n m` followed by `m` zero-terminated clauses of exactly three
/// literals. Lines starting with `c` are comments; a line starting with `%`
/// ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance, ReductionError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        last_line = line_no;
        if line.starts_with('p') {
            if header.is_some() {
                return Err(format_err(line_no, "duplicate problem line"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let ["p", "cnf", n, m] = fields[..] else {
                return Err(format_err(
                    line_no,
                    "expected 'p cnf <variables> <clauses>'",
                ));
            };
            let n = n
                .parse()
                .map_err(|_| format_err(line_no, format!("bad variable count {n:?}")))?;
            let m = m
                .parse()
                .map_err(|_| format_err(line_no, format!("bad clause count {m:?}")))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(format_err(line_no, "clause before the problem line"));
        };
        for token in line.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| format_err(line_no, format!("bad literal {token:?}")))?;
            if value == 0 {
                let clause_no = clauses.len() + 1;
                let clause: Clause =
                    pending
                        .as_slice()
                        .try_into()
                        .map_err(|_| ReductionError::NotThreeSat {
                            clause: clause_no,
                            size: pending.len(),
                        })?;
                pending.clear();
                clauses.push(clause);
                continue;
            }
            let lit = Literal::from_dimacs(value).expect("non-zero literal");
            if lit.variable() > n {
                return Err(ReductionError::VariableOutOfRange {
                    clause: clauses.len() + 1,
                    variable: lit.variable(),
                });
            }
            pending.push(lit);
        }
    }

    let Some((n, m)) = header else {
        return Err(format_err(last_line, "missing problem line"));
    };
    if !pending.is_empty() {
        return Err(format_err(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(format_err(
            last_line,
            format!(
                "header declares {m} clauses but {} were read",
                clauses.len()
            ),
        ));
    }
    CnfInstance::new(n, clauses)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_clause() {
        let cnf = parse_dimacs("p cnf 3 1\n1 -2 3 0").unwrap();
        assert_eq!(cnf.variable_count(), 3);
        assert_eq!(
            cnf.clauses(),
            &[[
                Literal::positive(1),
                Literal::negative(2),
                Literal::positive(3)
            ]]
        );
    }

    #[test]
    fn comments_and_split_clauses() {
        let text = "c example\np cnf 4 2\n1 2\n3 0 -1 -2 4\n0\n%\n0\n";
        let cnf = parse_dimacs(text).unwrap();
        assert_eq!(cnf.clause_count(), 2);
        assert_eq!(parse_dimacs(&cnf.to_dimacs()).unwrap(), cnf);
    }

    #[test]
    fn clause_size() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 0\n"),
            Err(ReductionError::NotThreeSat { clause: 1, size: 2 })
        );
    }

    #[test]
    fn unused_variable() {
        assert_eq!(
            parse_dimacs("p cnf 4 1\n1 2 3 0\n"),
            Err(ReductionError::UnusedVariable(4))
        );
    }

    #[test]
    fn format_errors() {
        for bad in [
            "1 2 3 0\n",
            "p cnf 3\n1 2 3 0\n",
            "p cnf 3 1\n1 x 3 0\n",
            "p cnf 3 1\n1 2 3\n",
            "p cnf 3 2\n1 2 3 0\n",
            "p cnf 3 1\np cnf 3 1\n1 2 3 0\n",
            "",
        ] {
            assert!(
                matches!(parse_dimacs(bad), Err(ReductionError::Format { .. })),
                "{bad:?}"
            );
        }
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 2 5 0\n"),
            Err(ReductionError::VariableOutOfRange {
                clause: 1,
                variable: 5
            })
        );
        assert_eq!(
            parse_dimacs("p cnf 3 1\n1 -1 3 0\n"),
            Err(ReductionError::Tautology {
                clause: 1,
                variable: 1
            })
        );
    }
}

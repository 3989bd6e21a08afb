use std::fmt;

use serde::Serialize;

use super::ReductionError;

/// Largest variable count accepted by [`sat_bruteforce`].
pub const MAX_BRUTEFORCE_VARIABLES: usize = 24;

/// A literal over variables numbered from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    variable: usize,
    negated: bool,
}

impl Literal {
    pub fn positive(variable: usize) -> Self {
        Literal {
            variable,
            negated: false,
        }
    }

    pub fn negative(variable: usize) -> Self {
        Literal {
            variable,
            negated: true,
        }
    }

    /// DIMACS encoding: `k` is u_k, `-k` is not u_k.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        let variable = usize::try_from(value.unsigned_abs())
            .ok()
            .filter(|&v| v > 0)?;
        Some(Literal {
            variable,
            negated: value < 0,
        })
    }

    pub fn variable(&self) -> usize {
        self.variable
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn to_dimacs(&self) -> i64 {
        let v = self.variable as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    /// Truth value under `assignment` (index 0 holds u_1).
    pub fn holds(&self, assignment: &[bool]) -> bool {
        assignment[self.variable - 1] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

pub type Clause = [Literal; 3];

/// A 3-CNF formula in which every variable occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfInstance {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfInstance {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self, ReductionError> {
        if clauses.is_empty() {
            return Err(ReductionError::NoClauses);
        }
        let mut used = vec![false; variable_count];
        for (i, clause) in clauses.iter().enumerate() {
            for lit in clause {
                let v = lit.variable();
                if v == 0 || v > variable_count {
                    return Err(ReductionError::VariableOutOfRange {
                        clause: i + 1,
                        variable: v,
                    });
                }
                used[v - 1] = true;
            }
            for (a, b) in [(0, 1), (0, 2), (1, 2)] {
                if clause[a].variable() == clause[b].variable()
                    && clause[a].is_negated() != clause[b].is_negated()
                {
                    return Err(ReductionError::Tautology {
                        clause: i + 1,
                        variable: clause[a].variable(),
                    });
                }
            }
        }
        if let Some(v) = used.iter().position(|&u| !u) {
            return Err(ReductionError::UnusedVariable(v + 1));
        }
        Ok(CnfInstance {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|clause| clause.iter().any(|lit| lit.holds(assignment)))
    }

    /// DIMACS text, one clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

/// A satisfying assignment, `assignment[j]` being the value of u_{j+1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment(pub Vec<bool>);

/// First satisfying assignment in lexicographic order of truth vectors
/// (false before true, u_1 most significant).
pub fn sat_bruteforce(cnf: &CnfInstance) -> Result<Option<Assignment>, ReductionError> {
    let n = cnf.variable_count();
    if n > MAX_BRUTEFORCE_VARIABLES {
        return Err(ReductionError::TooLarge { variables: n });
    }
    let mut assignment = vec![false; n];
    for code in 0u64..(1 << n) {
        for (j, value) in assignment.iter_mut().enumerate() {
            *value = code >> (n - 1 - j) & 1 == 1;
        }
        if cnf.satisfied_by(&assignment) {
            return Ok(Some(Assignment(assignment)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clause(a: i64, b: i64, c: i64) -> Clause {
        [a, b, c].map(|v| Literal::from_dimacs(v).unwrap())
    }

    pub(crate) fn all_sign_patterns() -> CnfInstance {
        let clauses = (0..8)
            .map(|k| {
                let s = |bit: i64, v: i64| if k >> bit & 1 == 1 { -v } else { v };
                clause(s(2, 1), s(1, 2), s(0, 3))
            })
            .collect();
        CnfInstance::new(3, clauses).unwrap()
    }

    #[test]
    fn single_clause_is_satisfied_by_all_false() {
        let cnf = CnfInstance::new(3, vec![clause(1, -2, 3)]).unwrap();
        assert_eq!(
            sat_bruteforce(&cnf).unwrap(),
            Some(Assignment(vec![false, false, false]))
        );
    }

    #[test]
    fn lexicographic_first() {
        // forces u1 = true
        let cnf = CnfInstance::new(3, vec![clause(1, 1, 1), clause(-2, -2, 3)]).unwrap();
        assert_eq!(
            sat_bruteforce(&cnf).unwrap(),
            Some(Assignment(vec![true, false, false]))
        );
    }

    #[test]
    fn all_sign_patterns_unsatisfiable() {
        assert_eq!(sat_bruteforce(&all_sign_patterns()).unwrap(), None);
    }

    #[test]
    fn invariants() {
        assert_eq!(CnfInstance::new(0, vec![]), Err(ReductionError::NoClauses));
        assert_eq!(
            CnfInstance::new(4, vec![clause(1, 2, 3)]),
            Err(ReductionError::UnusedVariable(4))
        );
        assert_eq!(
            CnfInstance::new(3, vec![clause(1, -1, 3)]),
            Err(ReductionError::Tautology {
                clause: 1,
                variable: 1
            })
        );
        assert_eq!(
            CnfInstance::new(2, vec![clause(1, 2, 3)]),
            Err(ReductionError::VariableOutOfRange {
                clause: 1,
                variable: 3
            })
        );
    }

    #[test]
    fn too_large() {
        let n = MAX_BRUTEFORCE_VARIABLES + 3;
        let clauses = (1..=n as i64)
            .step_by(3)
            .map(|v| clause(v, v + 1, v + 2))
            .collect();
        let cnf = CnfInstance::new(n, clauses).unwrap();
        assert_eq!(
            sat_bruteforce(&cnf),
            Err(ReductionError::TooLarge { variables: n })
        );
    }
}

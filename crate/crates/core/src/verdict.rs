use serde::Serialize;

/// Outcome of a co-finiteness decision for a Kleene closure `S*`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CofiniteResult {
    /// Infinitely many words are missing; `witness` is a missing word of
    /// `length` symbols.
    NotCofinite { length: usize, witness: String },
    /// Finitely many words are missing. Both fields are `None` when nothing
    /// is missing at all; otherwise `witness` is the lexicographically
    /// smallest missing word of the maximal missing length.
    Cofinite {
        frobenius_length: Option<usize>,
        witness: Option<String>,
    },
}

impl CofiniteResult {
    pub fn is_cofinite(&self) -> bool {
        matches!(self, CofiniteResult::Cofinite { .. })
    }

    pub fn frobenius_length(&self) -> Option<usize> {
        match self {
            CofiniteResult::Cofinite {
                frobenius_length, ..
            } => *frobenius_length,
            CofiniteResult::NotCofinite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            CofiniteResult::Cofinite { witness, .. } => witness.as_deref(),
            CofiniteResult::NotCofinite { witness, .. } => Some(witness),
        }
    }
}

//! Finite alphabets of single-character symbols.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Characters with a reserved meaning in the regex grammar.
pub const METACHARACTERS: [char; 6] = ['+', '(', ')', '*', 'ε', '∅'];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("duplicate symbol '{0}' in alphabet")]
    Duplicate(char),
    #[error("'{0}' cannot be used as an alphabet symbol")]
    InvalidSymbol(char),
}

/// Returns true when `c` may appear as a letter of an alphabet.
pub fn is_symbol_char(c: char) -> bool {
    !c.is_whitespace() && !c.is_control() && !METACHARACTERS.contains(&c)
}

/// An ordered set of symbols. Iteration order is ascending codepoint, which is
/// also the order used for every lexicographic tie-break in the crate.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "String")]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet, rejecting duplicates and reserved characters.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self, AlphabetError> {
        let mut out: Vec<char> = Vec::new();
        for c in symbols {
            if !is_symbol_char(c) {
                return Err(AlphabetError::InvalidSymbol(c));
            }
            if out.contains(&c) {
                return Err(AlphabetError::Duplicate(c));
            }
            out.push(c);
        }
        out.sort_unstable();
        Ok(Alphabet { symbols: out })
    }

    /// Builds an alphabet from an iterator that may repeat symbols.
    pub fn from_symbols_dedup<I: IntoIterator<Item = char>>(
        symbols: I,
    ) -> Result<Self, AlphabetError> {
        let mut all: Vec<char> = symbols.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        Alphabet::new(all)
    }

    /// Parses the compact textual form used on the command line: every
    /// non-whitespace character is one symbol.
    pub fn parse(text: &str) -> Result<Self, AlphabetError> {
        Alphabet::new(text.chars().filter(|c| !c.is_whitespace()))
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.binary_search(&c).is_ok()
    }

    /// Position of `c` in codepoint order.
    pub fn index_of(&self, c: char) -> Option<usize> {
        self.symbols.binary_search(&c).ok()
    }

    pub fn symbol(&self, index: usize) -> char {
        self.symbols[index]
    }

    pub fn is_superset_of(&self, other: &Alphabet) -> bool {
        other.symbols.iter().all(|&c| self.contains(c))
    }

    /// Symbols of `other` that are missing here.
    pub fn missing_from(&self, other: &Alphabet) -> Vec<char> {
        other
            .symbols
            .iter()
            .copied()
            .filter(|&c| !self.contains(c))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().copied()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Alphabet> for String {
    fn from(a: Alphabet) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_by_codepoint() {
        let a = Alphabet::new(['T', 'F', 'a']).unwrap();
        assert_eq!(a.symbols(), &['F', 'T', 'a']);
        assert_eq!(a.index_of('T'), Some(1));
        assert_eq!(a.to_string(), "FTa");
    }

    #[test]
    fn rejects_duplicates_and_metacharacters() {
        assert_eq!(Alphabet::parse("aba"), Err(AlphabetError::Duplicate('a')));
        assert_eq!(
            Alphabet::parse("a+"),
            Err(AlphabetError::InvalidSymbol('+'))
        );
        assert!(Alphabet::from_symbols_dedup("aba".chars()).is_ok());
    }

    #[test]
    fn superset() {
        let ab = Alphabet::parse("ab").unwrap();
        let a = Alphabet::parse("a").unwrap();
        assert!(ab.is_superset_of(&a));
        assert!(!a.is_superset_of(&ab));
        assert_eq!(a.missing_from(&ab), vec!['b']);
    }
}

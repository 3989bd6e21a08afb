//! Regular expression syntax trees, the concrete grammar, and a printer.
//!
//! Grammar (whitespace between tokens is ignored):
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+
//! factor := atom '*'*
//! atom   := symbol | 'ε' | 'EPS' | '∅' | 'EMPTY' | '(' expr ')'
//! ```
//!
//! `*` binds tightest, then juxtaposition (concatenation), then `+` (union).
//! Binary operators associate to the left. A symbol is any printable
//! non-whitespace character other than `+ ( ) * ε ∅`. The ASCII keywords
//! `EPS` and `EMPTY` are recognised greedily, so the three-letter word
//! `E P S` has to be written with a space somewhere inside it.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::alphabet::{is_symbol_char, Alphabet};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptySet,
    Epsilon,
    Symbol(char),
    Union(Box<RegexAst>, Box<RegexAst>),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn symbol(c: char) -> Self {
        RegexAst::Symbol(c)
    }

    pub fn union(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Union(Box::new(left), Box::new(right))
    }

    pub fn concat(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Concat(Box::new(left), Box::new(right))
    }

    pub fn star(inner: RegexAst) -> Self {
        RegexAst::Star(Box::new(inner))
    }

    /// Left-nested union of `parts`; the empty union is `∅`.
    pub fn union_all<I: IntoIterator<Item = RegexAst>>(parts: I) -> Self {
        parts
            .into_iter()
            .reduce(RegexAst::union)
            .unwrap_or(RegexAst::EmptySet)
    }

    /// Left-nested concatenation of `parts`; the empty product is `ε`.
    pub fn concat_all<I: IntoIterator<Item = RegexAst>>(parts: I) -> Self {
        parts
            .into_iter()
            .reduce(RegexAst::concat)
            .unwrap_or(RegexAst::Epsilon)
    }

    /// The expression matching exactly `word`.
    pub fn literal(word: &str) -> Self {
        RegexAst::concat_all(word.chars().map(RegexAst::Symbol))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    EmptyInput,
    UnbalancedParenthesis,
    EmptyBranch,
    DanglingStar,
    InvalidCharacter(char),
}

impl fmt::Display for SyntaxErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxErrorKind::EmptyInput => write!(f, "empty expression"),
            SyntaxErrorKind::UnbalancedParenthesis => write!(f, "unbalanced parenthesis"),
            SyntaxErrorKind::EmptyBranch => write!(f, "empty alternation branch"),
            SyntaxErrorKind::DanglingStar => write!(f, "'*' without an operand"),
            SyntaxErrorKind::InvalidCharacter(c) => write!(f, "invalid character {c:?}"),
        }
    }
}

/// A parse failure; `offset` counts characters (not bytes) from the start of
/// the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {kind}")]
pub struct SyntaxError {
    pub offset: usize,
    pub kind: SyntaxErrorKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Symbol(char),
    Epsilon,
    Empty,
    Plus,
    Star,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let starts_with = |i: usize, kw: &str| {
        let kw: Vec<char> = kw.chars().collect();
        chars.len() >= i + kw.len() && chars[i..i + kw.len()] == kw[..]
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let (token, width) = match c {
            '+' => (Token::Plus, 1),
            '*' => (Token::Star, 1),
            '(' => (Token::Open, 1),
            ')' => (Token::Close, 1),
            'ε' => (Token::Epsilon, 1),
            '∅' => (Token::Empty, 1),
            _ if starts_with(i, "EMPTY") => (Token::Empty, 5),
            _ if starts_with(i, "EPS") => (Token::Epsilon, 3),
            _ if is_symbol_char(c) => (Token::Symbol(c), 1),
            _ => {
                return Err(SyntaxError {
                    offset: i,
                    kind: SyntaxErrorKind::InvalidCharacter(c),
                })
            }
        };
        out.push((i, token));
        i += width;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn error(&self, kind: SyntaxErrorKind) -> SyntaxError {
        SyntaxError {
            offset: self.offset(),
            kind,
        }
    }

    fn expr(&mut self) -> Result<RegexAst, SyntaxError> {
        let mut node = self.term()?;
        while self.peek() == Some(Token::Plus) {
            self.pos += 1;
            node = RegexAst::union(node, self.term()?);
        }
        Ok(node)
    }

    fn term(&mut self) -> Result<RegexAst, SyntaxError> {
        let mut node: Option<RegexAst> = None;
        while let Some(factor) = self.factor()? {
            node = Some(match node {
                None => factor,
                Some(prev) => RegexAst::concat(prev, factor),
            });
        }
        match node {
            Some(n) => Ok(n),
            None if self.peek() == Some(Token::Star) => {
                Err(self.error(SyntaxErrorKind::DanglingStar))
            }
            None => Err(self.error(SyntaxErrorKind::EmptyBranch)),
        }
    }

    fn factor(&mut self) -> Result<Option<RegexAst>, SyntaxError> {
        let Some(mut node) = self.atom()? else {
            return Ok(None);
        };
        while self.peek() == Some(Token::Star) {
            self.pos += 1;
            node = RegexAst::star(node);
        }
        Ok(Some(node))
    }

    fn atom(&mut self) -> Result<Option<RegexAst>, SyntaxError> {
        let node = match self.peek() {
            Some(Token::Symbol(c)) => RegexAst::Symbol(c),
            Some(Token::Epsilon) => RegexAst::Epsilon,
            Some(Token::Empty) => RegexAst::EmptySet,
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Token::Close) {
                    return Err(self.error(SyntaxErrorKind::UnbalancedParenthesis));
                }
                inner
            }
            _ => return Ok(None),
        };
        self.pos += 1;
        Ok(Some(node))
    }
}

/// Parses `text` according to the module grammar.
pub fn parse_regex(text: &str) -> Result<RegexAst, SyntaxError> {
    let tokens = tokenize(text)?;
    let end = text.chars().count();
    if tokens.is_empty() {
        return Err(SyntaxError {
            offset: 0,
            kind: SyntaxErrorKind::EmptyInput,
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end,
    };
    let ast = parser.expr()?;
    match parser.peek() {
        None => Ok(ast),
        Some(Token::Close) => Err(parser.error(SyntaxErrorKind::UnbalancedParenthesis)),
        // expr only stops at ')' or end of input
        Some(_) => unreachable!("parser stopped on a non-closing token"),
    }
}

/// Number of symbol occurrences in the expression.
pub fn symbol_length(ast: &RegexAst) -> usize {
    match ast {
        RegexAst::EmptySet | RegexAst::Epsilon => 0,
        RegexAst::Symbol(_) => 1,
        RegexAst::Union(l, r) | RegexAst::Concat(l, r) => symbol_length(l) + symbol_length(r),
        RegexAst::Star(inner) => symbol_length(inner),
    }
}

/// The distinct symbols occurring in the expression.
pub fn alphabet_of(ast: &RegexAst) -> Alphabet {
    fn collect(ast: &RegexAst, out: &mut BTreeSet<char>) {
        match ast {
            RegexAst::EmptySet | RegexAst::Epsilon => {}
            RegexAst::Symbol(c) => {
                out.insert(*c);
            }
            RegexAst::Union(l, r) | RegexAst::Concat(l, r) => {
                collect(l, out);
                collect(r, out);
            }
            RegexAst::Star(inner) => collect(inner, out),
        }
    }
    let mut set = BTreeSet::new();
    collect(ast, &mut set);
    Alphabet::new(set).expect("parsed symbols are distinct valid symbols")
}

fn level(ast: &RegexAst) -> u8 {
    match ast {
        RegexAst::Union(..) => 0,
        RegexAst::Concat(..) => 1,
        RegexAst::Star(_) => 2,
        _ => 3,
    }
}

fn keyword_across(left: &str, right: &str) -> bool {
    let joined = format!("{left}{right}");
    ["EPS", "EMPTY"].iter().any(|kw| {
        joined.match_indices(kw).any(|(at, _)| {
            let end = at + kw.len();
            at < left.len() && end > left.len()
        })
    })
}

fn render(ast: &RegexAst, ctx: u8, out: &mut String) {
    let wrap = level(ast) < ctx;
    if wrap {
        out.push('(');
    }
    match ast {
        RegexAst::EmptySet => out.push('∅'),
        RegexAst::Epsilon => out.push('ε'),
        RegexAst::Symbol(c) => out.push(*c),
        RegexAst::Union(l, r) => {
            render(l, 0, out);
            out.push('+');
            render(r, 1, out);
        }
        RegexAst::Concat(l, r) => {
            let mut left = String::new();
            render(l, 1, &mut left);
            let mut right = String::new();
            render(r, 2, &mut right);
            out.push_str(&left);
            if keyword_across(&left, &right) {
                out.push(' ');
            }
            out.push_str(&right);
        }
        RegexAst::Star(inner) => {
            render(inner, 2, out);
            out.push('*');
        }
    }
    if wrap {
        out.push(')');
    }
}

impl fmt::Display for RegexAst {
    /// Minimal-parenthesis rendering that re-parses to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        render(self, 0, &mut out);
        f.write_str(&out)
    }
}

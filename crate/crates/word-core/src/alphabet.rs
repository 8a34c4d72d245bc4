use crate::error::SourceError;
use serde::{Deserialize, Serialize};

/// Ordered set of distinct symbols. The declaration order is the total order
/// used everywhere for lexicographic comparisons, so symbol indices compare
/// the same way the symbols do.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<char>", into = "Vec<char>")]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, SourceError> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(SourceError::EmptyAlphabet);
        }
        for (i, &s) in symbols.iter().enumerate() {
            if symbols[..i].contains(&s) {
                return Err(SourceError::DuplicateSymbol { symbol: s });
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The two-letter alphabet {a, b} used by most examples.
    pub fn binary() -> Self {
        Alphabet {
            symbols: vec!['a', 'b'],
        }
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == symbol).map(|i| i as u8)
    }

    pub fn symbol(&self, index: u8) -> Result<char, SourceError> {
        self.symbols
            .get(index as usize)
            .copied()
            .ok_or(SourceError::IndexOutOfRange {
                index,
                size: self.symbols.len(),
            })
    }

    /// Parses a string into symbol indices.
    pub fn parse(&self, text: &str) -> Result<Vec<u8>, SourceError> {
        text.chars()
            .map(|c| {
                self.index_of(c)
                    .ok_or(SourceError::UnknownSymbol { symbol: c })
            })
            .collect()
    }

    /// Renders symbol indices back to text. Indices must be in range.
    pub fn render(&self, syms: &[u8]) -> String {
        syms.iter().map(|&i| self.symbols[i as usize]).collect()
    }
}

impl TryFrom<Vec<char>> for Alphabet {
    type Error = SourceError;
    fn try_from(v: Vec<char>) -> Result<Self, Self::Error> {
        Alphabet::new(v)
    }
}

impl From<Alphabet> for Vec<char> {
    fn from(a: Alphabet) -> Vec<char> {
        a.symbols
    }
}

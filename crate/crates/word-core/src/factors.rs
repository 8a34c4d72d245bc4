use crate::alphabet::Alphabet;
use crate::error::WordError;
use crate::source::PrefixSource;
use std::collections::BTreeSet;
use std::fmt;

/// A finite word stored as symbol indices into some alphabet. The ordering
/// derived from the indices is exactly the lexicographic order induced by
/// the alphabet's symbol order, so `Word` can live in ordered containers
/// without carrying its alphabet around.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, WordError> {
        Ok(Word(alphabet.parse(text)?))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn syms(&self) -> &[u8] {
        &self.0
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.0)
    }

    /// True when `needle` occurs in `self` as a contiguous block.
    pub fn contains_factor(&self, needle: &Word) -> bool {
        contains(&self.0, &needle.0)
    }
}

impl fmt::Display for Word {
    /// Debug-ish rendering by raw symbol index; use `render` for real output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

pub(crate) fn contains(hay: &[u8], needle: &[u8]) -> bool {
    if needle.is_empty() {
        return true;
    }
    hay.windows(needle.len()).any(|w| w == needle)
}

pub(crate) fn occurrences(hay: &[u8], needle: &[u8]) -> Vec<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return Vec::new();
    }
    hay.windows(needle.len())
        .enumerate()
        .filter(|(_, w)| *w == needle)
        .map(|(i, _)| i)
        .collect()
}

/// The distinct length-`length` factors seen in a window of `horizon` symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub length: usize,
    pub factors: BTreeSet<Word>,
    pub horizon: usize,
}

/// Distinct length-`n` windows of the source's analysis window.
///
/// For two-sided sources the window is the contiguous stretch around the
/// origin, not the interleaved fold, so factors are genuine factors.
pub fn factors(
    source: &dyn PrefixSource,
    n: usize,
    horizon: usize,
) -> Result<FactorSet, WordError> {
    if horizon < n {
        return Err(WordError::HorizonTooSmall {
            horizon,
            needed: n,
        });
    }
    let window = source.window(horizon)?;
    Ok(factor_set_of(&window, n, horizon))
}

pub(crate) fn factor_set_of(window: &[u8], n: usize, horizon: usize) -> FactorSet {
    let mut set = BTreeSet::new();
    if n == 0 {
        set.insert(Word::empty());
    } else if n <= window.len() {
        for w in window.windows(n) {
            set.insert(Word(w.to_vec()));
        }
    }
    FactorSet {
        length: n,
        factors: set,
        horizon,
    }
}

/// A factor-closed snapshot of a language, holding all members of length
/// 0..=max_length. Serves both word factor languages and normal bases.
#[derive(Debug, Clone)]
pub struct FactorLanguage {
    pub alphabet: Alphabet,
    by_length: Vec<BTreeSet<Word>>,
}

impl FactorLanguage {
    /// Validates factor closure: dropping the first or last symbol of any
    /// member must give a member.
    pub fn new(
        alphabet: Alphabet,
        by_length: Vec<BTreeSet<Word>>,
    ) -> Result<Self, WordError> {
        for (n, set) in by_length.iter().enumerate() {
            for w in set {
                if w.len() != n {
                    return Err(WordError::NotFactorClosed {
                        length: n,
                        witness: w.render(&alphabet),
                        missing: format!("(length {} entry in length-{} set)", w.len(), n),
                    });
                }
                if n == 0 {
                    continue;
                }
                let prev = &by_length[n - 1];
                for trimmed in [&w.0[1..], &w.0[..n - 1]] {
                    if !prev.contains(&Word(trimmed.to_vec())) {
                        return Err(WordError::NotFactorClosed {
                            length: n,
                            witness: w.render(&alphabet),
                            missing: alphabet.render(trimmed),
                        });
                    }
                }
            }
        }
        Ok(FactorLanguage {
            alphabet,
            by_length,
        })
    }

    pub fn max_length(&self) -> usize {
        self.by_length.len().saturating_sub(1)
    }

    pub fn of_length(&self, n: usize) -> Option<&BTreeSet<Word>> {
        self.by_length.get(n)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.by_length
            .get(w.len())
            .map(|s| s.contains(w))
            .unwrap_or(false)
    }
}

/// Snapshot of a source's factor language up to `max_length`.
pub fn factor_language(
    source: &dyn PrefixSource,
    max_length: usize,
    horizon: usize,
) -> Result<FactorLanguage, WordError> {
    if horizon < max_length {
        return Err(WordError::HorizonTooSmall {
            horizon,
            needed: max_length,
        });
    }
    let window = source.window(horizon)?;
    let by_length = (0..=max_length)
        .map(|n| factor_set_of(&window, n, horizon).factors)
        .collect();
    FactorLanguage::new(source.alphabet().clone(), by_length)
}

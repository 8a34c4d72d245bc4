use crate::error::WordError;
use crate::factors::{occurrences, Word};
use crate::source::PrefixSource;
use serde::Serialize;
use std::collections::BTreeSet;

/// Return words of a base factor v: every u (the empty word included) such
/// that v·u·v occurs in the window and v is not a factor of u.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReturnSet {
    pub base: Word,
    pub returns: BTreeSet<Word>,
    pub horizon: usize,
}

/// Collects all return words of `v` within the window.
///
/// u is a return word iff v·u·v occurs with no occurrence of v inside u;
/// occurrences of v inside v·u·v that merely overlap a boundary are allowed,
/// so a base with self-overlaps can have more return words than the two
/// minimal ones a Sturmian word is known for under the
/// consecutive-occurrence notion (see `consecutive_return_words`).
pub fn return_words(
    source: &dyn PrefixSource,
    v: &Word,
    horizon: usize,
) -> Result<ReturnSet, WordError> {
    let window = source.window(horizon)?;
    let pos = occurrences(&window, v.syms());
    if pos.is_empty() {
        return Err(WordError::BaseNotFactor { horizon });
    }
    let n = v.len();
    let mut returns = BTreeSet::new();
    for (i, &p) in pos.iter().enumerate() {
        // First occurrence starting at or after the end of this v; any pair
        // ending at or beyond p_m + n would enclose that occurrence, so the
        // admissible partners all start inside [p + n, p_m + n).
        let m = pos[i..].partition_point(|&q| q < p + n) + i;
        if m == pos.len() {
            continue;
        }
        let cutoff = pos[m] + n;
        for &q in &pos[m..] {
            if q >= cutoff {
                break;
            }
            returns.insert(Word(window[p + n..q].to_vec()));
        }
    }
    Ok(ReturnSet {
        base: v.clone(),
        returns,
        horizon,
    })
}

/// Distinct words w[p_i .. p_{i+1}] over consecutive occurrences p_i of v.
///
/// This is the notion under which a Sturmian word has exactly two return
/// words for every factor; it keeps the base as a prefix instead of
/// stripping it, so overlapping occurrences pose no representation problem.
pub fn consecutive_return_words(
    source: &dyn PrefixSource,
    v: &Word,
    horizon: usize,
) -> Result<BTreeSet<Word>, WordError> {
    let window = source.window(horizon)?;
    let pos = occurrences(&window, v.syms());
    if pos.is_empty() {
        return Err(WordError::BaseNotFactor { horizon });
    }
    Ok(pos
        .windows(2)
        .map(|w| Word(window[w[0]..w[1]].to_vec()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::source::{PeriodicSource, SubstitutionSource};

    fn fib() -> SubstitutionSource {
        SubstitutionSource::parse(&Alphabet::binary(), &[("a", "ab"), ("b", "a")], 'a').unwrap()
    }

    fn rendered(set: &BTreeSet<Word>, al: &Alphabet) -> Vec<String> {
        set.iter().map(|w| w.render(al)).collect()
    }

    #[test]
    fn fibonacci_single_letter() {
        let al = Alphabet::binary();
        let v = Word::parse(&al, "a").unwrap();
        let rs = return_words(&fib(), &v, 100).unwrap();
        assert_eq!(rendered(&rs.returns, &al), ["", "b"]);
    }

    #[test]
    fn fibonacci_ab() {
        let al = Alphabet::binary();
        let v = Word::parse(&al, "ab").unwrap();
        let rs = return_words(&fib(), &v, 200).unwrap();
        assert_eq!(rendered(&rs.returns, &al), ["", "a"]);
    }

    #[test]
    fn alternating_ab() {
        let al = Alphabet::binary();
        let src = PeriodicSource::parse(&al, "ab").unwrap();
        let v = Word::parse(&al, "ab").unwrap();
        let rs = return_words(&src, &v, 50).unwrap();
        assert_eq!(rendered(&rs.returns, &al), [""]);
    }

    #[test]
    fn overlapping_base_has_composite_returns() {
        // aba occurs at overlapping positions; besides the empty return the
        // literal definition admits ab, ba and baab.
        let al = Alphabet::binary();
        let v = Word::parse(&al, "aba").unwrap();
        let rs = return_words(&fib(), &v, 10_000).unwrap();
        assert_eq!(rendered(&rs.returns, &al), ["", "ab", "ba", "baab"]);
        for u in &rs.returns {
            assert!(!u.contains_factor(&v));
            let mut vuv = v.syms().to_vec();
            vuv.extend_from_slice(u.syms());
            vuv.extend_from_slice(v.syms());
            let window = fib().prefix(10_000).unwrap();
            assert!(crate::factors::contains(&window, &vuv));
        }
    }

    #[test]
    fn consecutive_returns_are_two_for_fibonacci() {
        let al = Alphabet::binary();
        for text in ["a", "ab", "aba", "abaaba"] {
            let v = Word::parse(&al, text).unwrap();
            let rs = consecutive_return_words(&fib(), &v, 10_000).unwrap();
            assert_eq!(rs.len(), 2, "base {}", text);
        }
    }

    #[test]
    fn absent_base_rejected() {
        let al = Alphabet::binary();
        let v = Word::parse(&al, "bb").unwrap();
        assert!(matches!(
            return_words(&fib(), &v, 100),
            Err(WordError::BaseNotFactor { .. })
        ));
    }
}

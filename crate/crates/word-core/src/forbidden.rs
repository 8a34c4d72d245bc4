use crate::error::WordError;
use crate::factors::{FactorLanguage, Word};
use std::collections::BTreeSet;

/// Minimal absent words of a factor-closed language: every w (1 <= |w| <=
/// max length of the snapshot) outside the language whose two maximal proper
/// factors (drop first symbol, drop last symbol) both belong to it.
///
/// Candidates are enumerated as one-symbol extensions of members, so the
/// cost is |language| * |alphabet|, not |alphabet|^n.
pub fn minimal_forbidden_words(language: &FactorLanguage) -> Result<BTreeSet<Word>, WordError> {
    let mut out = BTreeSet::new();
    let alphabet_size = language.alphabet.size() as u8;
    for n in 1..=language.max_length() {
        let members = language.of_length(n).expect("length within snapshot");
        let shorter = language.of_length(n - 1).expect("length within snapshot");
        for f in shorter {
            for x in 0..alphabet_size {
                // w = f·x: minimal forbidden iff w absent and w[1..] present
                // (w[..n-1] = f is present by construction).
                let mut w = f.syms().to_vec();
                w.push(x);
                let word = Word(w);
                if members.contains(&word) {
                    continue;
                }
                if shorter.contains(&Word(word.syms()[1..].to_vec())) {
                    out.insert(word);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::factors::factor_language;
    use crate::source::{PeriodicSource, SubstitutionSource};
    use std::collections::BTreeSet;

    fn rendered(set: &BTreeSet<Word>, al: &Alphabet) -> Vec<String> {
        set.iter().map(|w| w.render(al)).collect()
    }

    #[test]
    fn alternating_forbids_aa_bb() {
        let al = Alphabet::binary();
        let src = PeriodicSource::parse(&al, "ab").unwrap();
        let lang = factor_language(&src, 3, 50).unwrap();
        let mfw = minimal_forbidden_words(&lang).unwrap();
        assert_eq!(rendered(&mfw, &al), ["aa", "bb"]);
    }

    #[test]
    fn free_language_has_none() {
        let al = Alphabet::binary();
        let sets = (0..=3)
            .map(|n| {
                let mut s = BTreeSet::new();
                // all words of length n
                let count = 1usize << n;
                for bits in 0..count {
                    s.insert(Word((0..n).map(|i| ((bits >> i) & 1) as u8).collect()));
                }
                s
            })
            .collect();
        let lang = FactorLanguage::new(al, sets).unwrap();
        assert!(minimal_forbidden_words(&lang).unwrap().is_empty());
    }

    #[test]
    fn fibonacci_short_obstructions() {
        let al = Alphabet::binary();
        let fib =
            SubstitutionSource::parse(&al, &[("a", "ab"), ("b", "a")], 'a').unwrap();
        let lang = factor_language(&fib, 4, 200).unwrap();
        let mfw = minimal_forbidden_words(&lang).unwrap();
        assert_eq!(rendered(&mfw, &al), ["aaa", "bb"]);
    }
}

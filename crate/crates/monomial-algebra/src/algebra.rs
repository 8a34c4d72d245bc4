use crate::error::AlgebraError;
use std::collections::{BTreeMap, BTreeSet};
use word_core::{
    factor_language, minimal_forbidden_words, Alphabet, FactorLanguage, PrefixSource, Word,
};

/// Memory ceiling for normal-word enumeration. The frontier at each length
/// is costed at word length + container overhead per entry; crossing the
/// ceiling aborts with the offending length instead of thrashing.
#[derive(Debug, Clone, Copy)]
pub struct ResourceBudget {
    pub max_bytes: u64,
}

impl ResourceBudget {
    pub fn from_megabytes(mb: u64) -> Self {
        ResourceBudget {
            max_bytes: mb.saturating_mul(1024 * 1024),
        }
    }

    pub fn megabytes(&self) -> u64 {
        self.max_bytes / (1024 * 1024)
    }
}

impl Default for ResourceBudget {
    fn default() -> Self {
        ResourceBudget::from_megabytes(256)
    }
}

/// Quotient of the free algebra on `alphabet` by the ideal of all words
/// containing an obstruction as a factor. The obstruction set is stored as
/// an antichain: construction drops any word that contains another.
///
/// A set produced by truncating an infinite supply (minimal forbidden words
/// of an infinite word, cut at a depth) remembers that depth; analyses that
/// need the set to be complete up to some length check against it.
pub struct MonomialAlgebra {
    alphabet: Alphabet,
    obstructions: Vec<Word>,
    by_length: BTreeMap<usize, BTreeSet<Vec<u8>>>,
    truncation_depth: Option<usize>,
    provenance: Option<Box<dyn PrefixSource>>,
}

impl std::fmt::Debug for MonomialAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MonomialAlgebra")
            .field("alphabet", &self.alphabet)
            .field("obstructions", &self.obstructions)
            .field("truncation_depth", &self.truncation_depth)
            .field("has_provenance", &self.provenance.is_some())
            .finish()
    }
}

impl MonomialAlgebra {
    pub fn from_obstructions(
        alphabet: Alphabet,
        obstructions: Vec<Word>,
    ) -> Result<Self, AlgebraError> {
        Self::build(alphabet, obstructions, None, None)
    }

    /// Obstructions = minimal forbidden words of the source's factor
    /// language, cut at `truncation_depth`. The source is kept as the
    /// algebra's provenance so classification can test the core language
    /// it came from.
    pub fn from_word_source(
        source: Box<dyn PrefixSource>,
        truncation_depth: usize,
        horizon: usize,
    ) -> Result<Self, AlgebraError> {
        let language = factor_language(source.as_ref(), truncation_depth, horizon)?;
        let forbidden = minimal_forbidden_words(&language)?;
        Self::build(
            source.alphabet().clone(),
            forbidden.into_iter().collect(),
            Some(truncation_depth),
            Some(source),
        )
    }

    fn build(
        alphabet: Alphabet,
        mut obstructions: Vec<Word>,
        truncation_depth: Option<usize>,
        provenance: Option<Box<dyn PrefixSource>>,
    ) -> Result<Self, AlgebraError> {
        for w in &obstructions {
            if w.is_empty() {
                return Err(AlgebraError::EmptyObstruction);
            }
            for &s in w.syms() {
                if s as usize >= alphabet.size() {
                    return Err(AlgebraError::SymbolOutOfRange {
                        index: s,
                        size: alphabet.size(),
                    });
                }
            }
        }
        // Antichain: deg-lex sort, then keep words containing no kept word.
        obstructions.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
        obstructions.dedup();
        let mut kept: Vec<Word> = Vec::new();
        for w in obstructions {
            if !kept.iter().any(|o| w.contains_factor(o)) {
                kept.push(w);
            }
        }
        let mut by_length: BTreeMap<usize, BTreeSet<Vec<u8>>> = BTreeMap::new();
        for w in &kept {
            by_length
                .entry(w.len())
                .or_default()
                .insert(w.syms().to_vec());
        }
        Ok(MonomialAlgebra {
            alphabet,
            obstructions: kept,
            by_length,
            truncation_depth,
            provenance,
        })
    }

    /// Re-derives the obstruction set from the provenance source at a deeper
    /// truncation, for analyses that probe past the stored depth. None when
    /// there is no provenance or the stored depth already suffices. The
    /// deepened copy carries no provenance of its own: it only ever serves
    /// normal-word enumeration.
    pub(crate) fn reobstructed(
        &self,
        depth: usize,
        horizon: usize,
    ) -> Result<Option<MonomialAlgebra>, AlgebraError> {
        let Some(src) = self.provenance.as_deref() else {
            return Ok(None);
        };
        if self.truncation_depth.map_or(true, |d| d >= depth) {
            return Ok(None);
        }
        let language = factor_language(src, depth, horizon)?;
        let forbidden = minimal_forbidden_words(&language)?;
        Ok(Some(Self::build(
            self.alphabet.clone(),
            forbidden.into_iter().collect(),
            Some(depth),
            None,
        )?))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// The minimized obstruction antichain in deg-lex order.
    pub fn obstructions(&self) -> &[Word] {
        &self.obstructions
    }

    pub fn max_obstruction_len(&self) -> usize {
        self.obstructions.last().map_or(0, |w| w.len())
    }

    pub fn truncation_depth(&self) -> Option<usize> {
        self.truncation_depth
    }

    pub fn provenance(&self) -> Option<&dyn PrefixSource> {
        self.provenance.as_deref()
    }

    /// True when the stored set lists every obstruction of length <= n.
    pub fn complete_up_to(&self, n: usize) -> bool {
        self.truncation_depth.map_or(true, |d| n <= d)
    }

    /// Does any obstruction end exactly at the last symbol of w? With w
    /// built by extending an already-normal word one symbol, this is the
    /// whole normality test.
    pub(crate) fn blocks_suffix(&self, w: &[u8]) -> bool {
        self.by_length
            .iter()
            .take_while(|(len, _)| **len <= w.len())
            .any(|(len, set)| set.contains(&w[w.len() - len..]))
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        (1..=w.len()).all(|end| !self.blocks_suffix(&w.syms()[..end]))
    }
}

/// Runs `visit(length, survivors)` for each length 0..=max_len, where
/// survivors are the normal words of that length in lexicographic order.
/// The frontier is extended one symbol at a time, so cost tracks the
/// language, not |alphabet|^n.
pub(crate) fn level_iterate<F>(
    alg: &MonomialAlgebra,
    max_len: usize,
    budget: &ResourceBudget,
    mut visit: F,
) -> Result<(), AlgebraError>
where
    F: FnMut(usize, &[Vec<u8>]),
{
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    visit(0, &frontier);
    let symbols = alg.alphabet.size() as u8;
    for len in 1..=max_len {
        let projected = frontier.len() as u64 * symbols as u64 * (len as u64 + 48);
        if projected > budget.max_bytes {
            return Err(AlgebraError::ResourceExceeded {
                at_length: len,
                live_words: frontier.len() * symbols as usize,
                budget_mb: budget.megabytes(),
            });
        }
        let mut next = Vec::new();
        for word in &frontier {
            for s in 0..symbols {
                let mut candidate = Vec::with_capacity(len);
                candidate.extend_from_slice(word);
                candidate.push(s);
                if !alg.blocks_suffix(&candidate) {
                    next.push(candidate);
                }
            }
        }
        frontier = next;
        visit(len, &frontier);
        if frontier.is_empty() {
            break;
        }
    }
    Ok(())
}

/// All normal words of length exactly n, lexicographically ordered.
pub fn normal_words(
    alg: &MonomialAlgebra,
    n: usize,
    budget: &ResourceBudget,
) -> Result<Vec<Word>, AlgebraError> {
    let mut out = Vec::new();
    level_iterate(alg, n, budget, |len, words| {
        if len == n {
            out = words.iter().map(|w| Word(w.clone())).collect();
        }
    })?;
    Ok(out)
}

/// Factor-language snapshot of the normal words up to max_len. Normality is
/// factor-closed, so the snapshot always validates.
pub fn normal_language(
    alg: &MonomialAlgebra,
    max_len: usize,
    budget: &ResourceBudget,
) -> Result<FactorLanguage, AlgebraError> {
    let mut by_length: Vec<BTreeSet<Word>> = Vec::with_capacity(max_len + 1);
    level_iterate(alg, max_len, budget, |_, words| {
        by_length.push(words.iter().map(|w| Word(w.clone())).collect());
    })?;
    while by_length.len() < max_len + 1 {
        by_length.push(BTreeSet::new());
    }
    Ok(FactorLanguage::new(alg.alphabet.clone(), by_length)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(texts: &[&str]) -> Vec<Word> {
        texts
            .iter()
            .map(|t| Word::parse(&Alphabet::binary(), t).unwrap())
            .collect()
    }

    fn algebra(obstructions: &[&str]) -> MonomialAlgebra {
        MonomialAlgebra::from_obstructions(Alphabet::binary(), words(obstructions)).unwrap()
    }

    #[test]
    fn construction_minimizes_to_an_antichain() {
        let alg = algebra(&["aab", "aa", "bb", "abb", "aa", "babab"]);
        assert_eq!(alg.obstructions(), words(&["aa", "bb", "babab"]));
        // babab contains neither aa nor bb; the extensions contained one.
        assert_eq!(alg.max_obstruction_len(), 5);
    }

    #[test]
    fn empty_and_out_of_range_obstructions_are_rejected() {
        assert!(matches!(
            MonomialAlgebra::from_obstructions(Alphabet::binary(), vec![Word::empty()]),
            Err(AlgebraError::EmptyObstruction)
        ));
        assert!(matches!(
            MonomialAlgebra::from_obstructions(Alphabet::binary(), vec![Word(vec![0, 2])]),
            Err(AlgebraError::SymbolOutOfRange { index: 2, size: 2 })
        ));
    }

    #[test]
    fn normal_words_of_the_square_free_pair() {
        let alg = algebra(&["aa", "bb"]);
        let budget = ResourceBudget::default();
        assert_eq!(normal_words(&alg, 3, &budget).unwrap(), words(&["aba", "bab"]));
        assert_eq!(normal_words(&alg, 8, &budget).unwrap().len(), 2);
    }

    #[test]
    fn free_algebra_keeps_every_word() {
        let alg = algebra(&[]);
        let budget = ResourceBudget::default();
        assert_eq!(normal_words(&alg, 2, &budget).unwrap().len(), 4);
        assert_eq!(normal_words(&alg, 10, &budget).unwrap().len(), 1024);
    }

    #[test]
    fn is_normal_matches_enumeration() {
        let alg = algebra(&["bb", "aaa"]);
        let budget = ResourceBudget::default();
        let normals = normal_words(&alg, 4, &budget).unwrap();
        assert_eq!(normals.len(), 5);
        for value in 0..16u8 {
            let w = Word((0..4).map(|i| (value >> i) & 1).collect());
            assert_eq!(alg.is_normal(&w), normals.contains(&w), "{w:?}");
        }
    }

    #[test]
    fn budget_guard_stops_the_free_frontier() {
        let alg = algebra(&[]);
        let tiny = ResourceBudget { max_bytes: 4096 };
        let err = normal_words(&alg, 12, &tiny).unwrap_err();
        assert!(matches!(err, AlgebraError::ResourceExceeded { .. }));
    }

    #[test]
    fn enumeration_stops_at_extinction() {
        let alg = algebra(&["aa", "ab", "ba", "bb"]);
        let budget = ResourceBudget::default();
        assert_eq!(normal_words(&alg, 6, &budget).unwrap(), vec![]);
        let lang = normal_language(&alg, 6, &budget).unwrap();
        assert_eq!(lang.of_length(1).unwrap().len(), 2);
        assert_eq!(lang.of_length(2).unwrap().len(), 0);
        assert_eq!(lang.of_length(6).unwrap().len(), 0);
    }
}

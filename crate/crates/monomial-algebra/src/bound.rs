use crate::algebra::{level_iterate, MonomialAlgebra, ResourceBudget};
use crate::error::AlgebraError;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Hard cap on the bound-check scan, independent of the caller's horizon.
const SCAN_CAP: usize = 48;

/// Finite form of the bounded-obstruction dichotomy: every obstruction is
/// either short (length <= the empirical K) or killed by margin padding,
/// and away from a detected core word the normal-word count per length
/// should stay bounded.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ObstructionBoundReport {
    pub margin: usize,
    pub scan_max_n: usize,
    /// Longest obstruction that survives margin padding; 0 when all die.
    pub empirical_k: usize,
    pub short: Vec<String>,
    pub margin_killed: Vec<String>,
    /// Start of the core word the counts are measured against.
    pub core_sample: Option<String>,
    /// length -> count of normal words that are not factors of the core.
    pub non_core_counts: BTreeMap<usize, usize>,
    pub max_non_core: usize,
    /// Non-core counts on the last third of the range stay within the
    /// maximum seen earlier.
    pub bounded: bool,
    /// Normal words die out inside the scanned range.
    pub finite_dimensional: bool,
}

/// True when every margin-sized padding of `v` contains some obstruction
/// occurrence other than the central copy of v itself. Such obstructions
/// never matter for words that extend margin-deep on both sides.
fn margin_kills(alg: &MonomialAlgebra, v: &[u8], margin: usize) -> bool {
    let symbols = alg.alphabet().size();
    let pad_count = symbols.pow(margin as u32);
    let mut padded = vec![0u8; margin + v.len() + margin];
    padded[margin..margin + v.len()].copy_from_slice(v);
    for left in 0..pad_count {
        write_pad(&mut padded[..margin], left, symbols);
        for right in 0..pad_count {
            write_pad(&mut padded[margin + v.len()..], right, symbols);
            let mut dirty = false;
            'scan: for o in alg.obstructions() {
                let o = o.syms();
                if o.len() > padded.len() {
                    break;
                }
                for pos in 0..=padded.len() - o.len() {
                    if pos == margin && o == v {
                        continue;
                    }
                    if &padded[pos..pos + o.len()] == o {
                        dirty = true;
                        break 'scan;
                    }
                }
            }
            if !dirty {
                return false;
            }
        }
    }
    true
}

fn write_pad(slot: &mut [u8], mut code: usize, symbols: usize) {
    for s in slot.iter_mut() {
        *s = (code % symbols) as u8;
        code /= symbols;
    }
}

/// Distinct factors of lengths 1..=cap, as a diversity score for picking a
/// core representative among equally long normal words.
fn gram_diversity(w: &[u8], cap: usize) -> usize {
    let mut seen: BTreeSet<&[u8]> = BTreeSet::new();
    for n in 1..=cap.min(w.len()) {
        seen.extend(w.windows(n));
    }
    seen.len()
}

pub fn obstruction_bound_check(
    alg: &MonomialAlgebra,
    horizon: usize,
    margin: usize,
    budget: &ResourceBudget,
) -> Result<ObstructionBoundReport, AlgebraError> {
    let mut scan_max_n = horizon.min(SCAN_CAP);
    if let Some(d) = alg.truncation_depth() {
        scan_max_n = scan_max_n.min(d.saturating_sub(margin));
    }

    let mut empirical_k = 0;
    let mut killed: Vec<&[u8]> = Vec::new();
    for o in alg.obstructions() {
        if margin_kills(alg, o.syms(), margin) {
            killed.push(o.syms());
        } else {
            empirical_k = empirical_k.max(o.len());
        }
    }
    let render = |syms: &[u8]| alg.alphabet().render(syms);
    let short: Vec<String> = alg
        .obstructions()
        .iter()
        .filter(|o| o.len() <= empirical_k)
        .map(|o| render(o.syms()))
        .collect();
    let margin_killed: Vec<String> = killed
        .iter()
        .filter(|o| o.len() > empirical_k)
        .map(|o| render(o))
        .collect();

    let mut levels: Vec<Vec<Vec<u8>>> = Vec::new();
    level_iterate(alg, scan_max_n, budget, |len, words| {
        debug_assert_eq!(len, levels.len());
        levels.push(words.to_vec());
    })?;
    let finite_dimensional = levels.len() <= scan_max_n;

    let mut report = ObstructionBoundReport {
        margin,
        scan_max_n,
        empirical_k,
        short,
        margin_killed,
        core_sample: None,
        non_core_counts: BTreeMap::new(),
        max_non_core: 0,
        bounded: true,
        finite_dimensional,
    };
    if finite_dimensional {
        return Ok(report);
    }

    // Core: the word the source generates when there is one, otherwise the
    // factor-richest of the longest normal words found.
    let core: Vec<u8> = match alg.provenance() {
        Some(src) => src.window(1000.max(100 * scan_max_n))?,
        None => levels[scan_max_n]
            .iter()
            .take(64)
            .max_by_key(|w| gram_diversity(w, 8))
            .cloned()
            .unwrap_or_default(),
    };
    report.core_sample = Some(render(&core[..core.len().min(80)]));

    for (n, words) in levels.iter().enumerate().skip(1) {
        let grams: BTreeSet<&[u8]> = if core.len() >= n {
            core.windows(n).collect()
        } else {
            BTreeSet::new()
        };
        let stray = words
            .iter()
            .filter(|w| !grams.contains(w.as_slice()))
            .count();
        report.max_non_core = report.max_non_core.max(stray);
        report.non_core_counts.insert(n, stray);
    }
    let tail_start = scan_max_n - scan_max_n / 3;
    let early_max = report
        .non_core_counts
        .range(1..tail_start)
        .map(|(_, &c)| c)
        .max()
        .unwrap_or(0);
    let tail_max = report
        .non_core_counts
        .range(tail_start..)
        .map(|(_, &c)| c)
        .max()
        .unwrap_or(0);
    report.bounded = tail_max <= early_max;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use word_core::{Alphabet, Word};

    fn binary_algebra(obstructions: &[&str]) -> MonomialAlgebra {
        let al = Alphabet::binary();
        let words = obstructions
            .iter()
            .map(|t| Word::parse(&al, t).unwrap())
            .collect();
        MonomialAlgebra::from_obstructions(al, words).unwrap()
    }

    #[test]
    fn antichain_obstructions_survive_zero_margin() {
        let alg = binary_algebra(&["aa", "bb"]);
        assert!(!margin_kills(&alg, &[0, 0], 0));
        assert!(!margin_kills(&alg, &[1, 1], 0));
    }

    #[test]
    fn fibonacci_obstructions_survive_margin_two() {
        let alg = binary_algebra(&["bb", "aaa", "babab", "aabaabaa", "babaababaabab"]);
        for o in alg.obstructions() {
            assert!(
                !margin_kills(&alg, o.syms(), 2),
                "{} reported killed",
                o.render(alg.alphabet())
            );
        }
    }

    #[test]
    fn saturating_set_margin_kills_everything() {
        // All 8 words of length 3: any padding of any of them contains
        // another length-3 word off-center.
        let all: Vec<String> = (0..8)
            .map(|i| {
                (0..3)
                    .map(|b| if i >> b & 1 == 1 { 'b' } else { 'a' })
                    .collect()
            })
            .collect();
        let refs: Vec<&str> = all.iter().map(|s| s.as_str()).collect();
        let alg = binary_algebra(&refs);
        let report =
            obstruction_bound_check(&alg, 40, 2, &ResourceBudget::default()).unwrap();
        assert!(report.finite_dimensional);
        assert_eq!(report.empirical_k, 0);
        assert!(report.short.is_empty());
        assert_eq!(report.margin_killed.len(), 8);
        assert_eq!(report.core_sample, None);
        assert!(report.non_core_counts.is_empty());
    }

    #[test]
    fn explicit_one_way_algebra_measures_against_its_richest_word() {
        // No ab: core should be a b^i a^j word, not the plain power.
        let alg = binary_algebra(&["ab"]);
        let report =
            obstruction_bound_check(&alg, 20, 2, &ResourceBudget::default()).unwrap();
        assert_eq!(report.scan_max_n, 20);
        assert!(!report.finite_dimensional);
        assert_eq!(report.empirical_k, 2);
        let core = report.core_sample.clone().unwrap();
        assert!(core.contains('a') && core.contains('b'), "core {core}");
        // Words riding the other extreme are not its factors.
        assert!(report.max_non_core > 0);
    }

    #[test]
    fn pad_writer_enumerates_all_words() {
        let mut seen = BTreeSet::new();
        for code in 0..9 {
            let mut slot = [0u8; 2];
            write_pad(&mut slot, code, 3);
            seen.insert(slot);
        }
        assert_eq!(seen.len(), 9);
    }
}

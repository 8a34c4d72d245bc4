use crate::algebra::{level_iterate, MonomialAlgebra, ResourceBudget};
use crate::error::AlgebraError;
use crate::growth::{boundary_verdict, growth_profile, BoundaryVerdict};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use word_core::recurrence_report;

/// Longest period tried when fitting periodic tails to a normal word.
const MAX_PERIOD: usize = 8;
/// Longest connector a two-sided periodic fit may leave in the middle.
const MAX_CONNECTOR: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClassifyVerdict {
    #[serde(rename = "CASE_1_EVIDENCE")]
    Case1Evidence,
    #[serde(rename = "CASE_2_EVIDENCE")]
    Case2Evidence,
    #[serde(rename = "NOT_BOUNDARY")]
    NotBoundary,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for ClassifyVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            ClassifyVerdict::Case1Evidence => "CASE_1_EVIDENCE",
            ClassifyVerdict::Case2Evidence => "CASE_2_EVIDENCE",
            ClassifyVerdict::NotBoundary => "NOT_BOUNDARY",
            ClassifyVerdict::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(tag)
    }
}

/// A structural family accounting for some of the long normal words.
///
/// TwoSidedPeriodic: words u^p c v^q with both exponents growing.
/// PeriodicSeries: words prefix cycle^k suffix with bounded ends and one
/// growing exponent (covers one-sided periodic tails).
/// RecurrentCore: all long normal words are factors of one uniformly
/// recurrent word with complexity n + excess.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family")]
pub enum Family {
    #[serde(rename = "TWO_SIDED_PERIODIC", rename_all = "camelCase")]
    TwoSidedPeriodic {
        u: String,
        connector: String,
        v: String,
        count: usize,
        witness: String,
    },
    #[serde(rename = "PERIODIC_SERIES", rename_all = "camelCase")]
    PeriodicSeries {
        prefix: String,
        cycle: String,
        suffix: String,
        exponents: Vec<usize>,
        count: usize,
        witness: String,
    },
    #[serde(rename = "RECURRENT_CORE", rename_all = "camelCase")]
    RecurrentCore {
        excess: i64,
        sample: String,
        checked_length: usize,
        witness: String,
    },
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassifyDiagnostics {
    pub boundary: Option<BoundaryVerdict>,
    pub table_max_n: usize,
    pub margin: usize,
    pub truncation_depth: Option<usize>,
    pub probe_lengths: Vec<usize>,
    pub probe_counts: Vec<usize>,
    pub unexplained_words: Option<usize>,
    pub families_stable: Option<bool>,
    pub core_uniformly_recurrent: Option<bool>,
    pub core_contains_normal_words: Option<bool>,
}

/// Horizon-relative structural verdict. Everything here is evidence at the
/// probe lengths, never a proof: the verdict says what the enumerated
/// normal words look like, not what the algebra is.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub verdict: ClassifyVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub families: Vec<Family>,
    pub diagnostics: ClassifyDiagnostics,
}

fn inconclusive(reason: String, diagnostics: ClassifyDiagnostics) -> ClassificationReport {
    ClassificationReport {
        verdict: ClassifyVerdict::Inconclusive,
        reason: Some(reason),
        families: Vec::new(),
        diagnostics,
    }
}

/// Shape key of one fitted word, before rendering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Fit {
    TwoSided { u: Vec<u8>, c: Vec<u8>, v: Vec<u8> },
    Series { e: Vec<u8>, r: Vec<u8>, f: Vec<u8> },
}

struct FitAgg {
    count: usize,
    exponents: BTreeSet<usize>,
    witness: Vec<u8>,
}

/// Length of the longest prefix in which every symbol repeats the one p
/// places earlier. Always >= min(p, |w|).
fn run_left(w: &[u8], p: usize) -> usize {
    let mut l = p.min(w.len());
    while l < w.len() && w[l] == w[l - p] {
        l += 1;
    }
    l
}

fn run_right(w: &[u8], p: usize) -> usize {
    let mut l = p.min(w.len());
    while l < w.len() && w[w.len() - 1 - l] == w[w.len() - 1 - l + p] {
        l += 1;
    }
    l
}

/// Shortest word whose repetition gives w.
fn primitive_root(w: &[u8]) -> Vec<u8> {
    for d in 1..=w.len() {
        if w.len() % d == 0 && w.iter().enumerate().all(|(i, &s)| s == w[i % d]) {
            return w[..d].to_vec();
        }
    }
    w.to_vec()
}

/// Tries to read w as periodic-left + connector + periodic-right, with
/// periods at most MAX_PERIOD and connector at most MAX_CONNECTOR. A side
/// counts as periodic only with at least two full periods. Returns the
/// canonical fit (maximal runs absorbed into the tails) and the larger
/// exponent, or None when no such shape fits.
fn fit_word(w: &[u8]) -> Option<(Fit, usize)> {
    // (connector span, pu + pv, pu, pv, a, b): minimized lexicographically.
    let mut best: Option<(usize, usize, usize, usize, usize, usize)> = None;
    for pu in 0..=MAX_PERIOD.min(w.len()) {
        let a = if pu == 0 {
            0
        } else {
            let a = run_left(w, pu) / pu;
            if a < 2 {
                continue;
            }
            a
        };
        let rem = &w[a * pu..];
        for pv in 0..=MAX_PERIOD.min(rem.len()) {
            let b = if pv == 0 {
                0
            } else {
                let b = run_right(rem, pv) / pv;
                if b < 2 {
                    continue;
                }
                b
            };
            if a == 0 && b == 0 {
                continue;
            }
            let span = rem.len() - b * pv;
            if span > MAX_CONNECTOR {
                continue;
            }
            let cand = (span, pu + pv, pu, pv, a, b);
            if best.map_or(true, |cur| cand < cur) {
                best = Some(cand);
            }
        }
    }
    let (_, _, pu, pv, a, b) = best?;
    let mut c_start = a * pu;
    let mut c_end = w.len() - b * pv;
    // Absorb periodic continuations of either tail into the tail, so the
    // connector and the tail phases are canonical for the family.
    if pu > 0 {
        while c_start < c_end && w[c_start] == w[c_start - pu] {
            c_start += 1;
        }
    }
    if pv > 0 {
        while c_end > c_start && w[c_end - 1] == w[c_end - 1 + pv] {
            c_end -= 1;
        }
    }
    let c = w[c_start..c_end].to_vec();
    if pu > 0 && pv > 0 {
        let u = primitive_root(&w[c_start - pu..c_start]);
        let v = primitive_root(&w[c_end..c_end + pv]);
        let exp = (c_start / u.len()).max((w.len() - c_end) / v.len());
        Some((Fit::TwoSided { u, c, v }, exp))
    } else if pu > 0 {
        let u = primitive_root(&w[c_start - pu..c_start]);
        let exp = c_start / u.len();
        Some((
            Fit::Series {
                e: Vec::new(),
                r: u,
                f: c,
            },
            exp,
        ))
    } else {
        let v = primitive_root(&w[c_end..c_end + pv]);
        let exp = (w.len() - c_end) / v.len();
        Some((
            Fit::Series {
                e: c,
                r: v,
                f: Vec::new(),
            },
            exp,
        ))
    }
}

/// Fits every word of one probe level. Returns per-shape aggregates and the
/// number of words no shape fits.
fn fit_level(words: &[Vec<u8>]) -> (BTreeMap<Fit, FitAgg>, usize) {
    let mut fits: BTreeMap<Fit, FitAgg> = BTreeMap::new();
    let mut unexplained = 0;
    for w in words {
        match fit_word(w) {
            Some((fit, exp)) => {
                let agg = fits.entry(fit).or_insert_with(|| FitAgg {
                    count: 0,
                    exponents: BTreeSet::new(),
                    witness: w.clone(),
                });
                agg.count += 1;
                agg.exponents.insert(exp);
            }
            None => unexplained += 1,
        }
    }
    (fits, unexplained)
}

/// Structural read of the long normal words, graded as evidence.
///
/// The growth table (to length 12) fixes the boundary hypothesis first;
/// probes at horizon/20 and horizon/10 then test which shape the long
/// normal words take. Truncated obstruction supplies are re-derived from
/// their source deep enough to keep the probed words trustworthy.
pub fn classify(
    alg: &MonomialAlgebra,
    horizon: usize,
    budget: &ResourceBudget,
) -> Result<ClassificationReport, AlgebraError> {
    let margin = 1;
    let table_max_n = alg
        .truncation_depth()
        .map_or(12, |d| 12.min(d.saturating_sub(2 * margin)));
    let mut diag = ClassifyDiagnostics {
        boundary: None,
        table_max_n,
        margin,
        truncation_depth: alg.truncation_depth(),
        probe_lengths: Vec::new(),
        probe_counts: Vec::new(),
        unexplained_words: None,
        families_stable: None,
        core_uniformly_recurrent: None,
        core_contains_normal_words: None,
    };
    if table_max_n < 8 {
        return Ok(inconclusive(
            format!(
                "truncation depth {} supports growth tables only to length {}, need 8",
                alg.truncation_depth().unwrap_or(0),
                table_max_n
            ),
            diag,
        ));
    }
    let probe_hi = (horizon / 10).min(80);
    let probe_lo = probe_hi / 2;
    if probe_hi < 24 {
        return Ok(inconclusive(
            format!("horizon {horizon} leaves probe length {probe_hi}, need 24"),
            diag,
        ));
    }

    let profile = match growth_profile(alg, table_max_n, margin, budget) {
        Ok(p) => p,
        Err(AlgebraError::ResourceExceeded { at_length, .. }) => {
            return Ok(inconclusive(
                format!("resource budget exhausted tabulating growth at length {at_length}"),
                diag,
            ));
        }
        Err(e) => return Err(e),
    };
    let verdict = boundary_verdict(&profile)?;
    diag.boundary = Some(verdict.clone());
    let excess = match verdict {
        BoundaryVerdict::BoundaryAtHorizon { excess } => excess,
        other => {
            return Ok(inconclusive(
                format!("not boundary ({})", other.tag()),
                diag,
            ));
        }
    };

    // Words probed beyond the stored truncation are only meaningful if the
    // obstruction set is complete out there; re-derive it from the source.
    let deepened = alg.reobstructed(probe_hi + 1, horizon)?;
    let probe_alg = deepened.as_ref().unwrap_or(alg);
    let mut lo_words: Vec<Vec<u8>> = Vec::new();
    let mut hi_words: Vec<Vec<u8>> = Vec::new();
    let walk = level_iterate(probe_alg, probe_hi, budget, |len, words| {
        if len == probe_lo {
            lo_words = words.to_vec();
        } else if len == probe_hi {
            hi_words = words.to_vec();
        }
    });
    match walk {
        Ok(()) => {}
        Err(AlgebraError::ResourceExceeded { at_length, .. }) => {
            return Ok(inconclusive(
                format!("resource budget exhausted enumerating normal words at length {at_length}"),
                diag,
            ));
        }
        Err(e) => return Err(e),
    }
    diag.probe_lengths = vec![probe_lo, probe_hi];
    diag.probe_counts = vec![lo_words.len(), hi_words.len()];

    // The probe counts are exact values of T. If they leave the boundary
    // line the table suggested, the table was too short, and that is a
    // positive refutation, not an unknown.
    let expected_lo = probe_lo as i64 + excess;
    let expected_hi = probe_hi as i64 + excess;
    if lo_words.len() as i64 != expected_lo || hi_words.len() as i64 != expected_hi {
        return Ok(ClassificationReport {
            verdict: ClassifyVerdict::NotBoundary,
            reason: Some(format!(
                "T({probe_lo}) = {}, T({probe_hi}) = {}: the counts leave the line n + {excess} \
                 the table to length {table_max_n} suggested",
                lo_words.len(),
                hi_words.len()
            )),
            families: Vec::new(),
            diagnostics: diag,
        });
    }

    // Case 1 shape: every probed word is periodic tails + bounded middle,
    // and the same family set explains both probe lengths.
    let (lo_fits, lo_unexplained) = fit_level(&lo_words);
    let (hi_fits, hi_unexplained) = fit_level(&hi_words);
    diag.unexplained_words = Some(hi_unexplained);
    let lo_keys: BTreeSet<&Fit> = lo_fits.keys().collect();
    let hi_keys: BTreeSet<&Fit> = hi_fits.keys().collect();
    let stable = lo_keys == hi_keys;
    diag.families_stable = Some(stable);
    if lo_unexplained == 0 && hi_unexplained == 0 && stable && !hi_fits.is_empty() {
        let al = alg.alphabet();
        let render = |syms: &[u8]| al.render(syms);
        let families = hi_fits
            .iter()
            .map(|(fit, agg)| match fit {
                Fit::TwoSided { u, c, v } => Family::TwoSidedPeriodic {
                    u: render(u),
                    connector: render(c),
                    v: render(v),
                    count: agg.count,
                    witness: render(&agg.witness),
                },
                Fit::Series { e, r, f } => {
                    let mut exponents: BTreeSet<usize> = agg.exponents.clone();
                    if let Some(lo) = lo_fits.get(fit) {
                        exponents.extend(lo.exponents.iter().copied());
                    }
                    Family::PeriodicSeries {
                        prefix: render(e),
                        cycle: render(r),
                        suffix: render(f),
                        exponents: exponents.into_iter().collect(),
                        count: agg.count,
                        witness: render(&agg.witness),
                    }
                }
            })
            .collect();
        return Ok(ClassificationReport {
            verdict: ClassifyVerdict::Case1Evidence,
            reason: None,
            families,
            diagnostics: diag,
        });
    }

    // Case 2 shape: a provenance word that is uniformly recurrent and whose
    // factors account for every probed word.
    if let Some(src) = alg.provenance() {
        let recurrence = recurrence_report(src, probe_lo, horizon)?;
        let recurrent = recurrence.uniformly_recurrent_at_horizon;
        diag.core_uniformly_recurrent = Some(recurrent);
        let window = src.window(horizon)?;
        let grams: BTreeSet<&[u8]> = if window.len() >= probe_hi {
            window.windows(probe_hi).collect()
        } else {
            BTreeSet::new()
        };
        let contained = hi_words.iter().all(|w| grams.contains(w.as_slice()));
        diag.core_contains_normal_words = Some(contained);
        if recurrent && contained {
            let sample_len = window.len().min(40);
            let witness = hi_words
                .first()
                .map(|w| alg.alphabet().render(w))
                .unwrap_or_default();
            return Ok(ClassificationReport {
                verdict: ClassifyVerdict::Case2Evidence,
                reason: None,
                families: vec![Family::RecurrentCore {
                    excess,
                    sample: alg.alphabet().render(&window[..sample_len]),
                    checked_length: probe_hi,
                    witness,
                }],
                diagnostics: diag,
            });
        }
        let mut why = Vec::new();
        if !recurrent {
            why.push(format!(
                "source is not uniformly recurrent at horizon {horizon}{}",
                recurrence
                    .non_recurring_witness
                    .as_ref()
                    .map(|w| format!(" (factor {} recurs too slowly)", w.render(alg.alphabet())))
                    .unwrap_or_default()
            ));
        }
        if !contained {
            let stray = hi_words
                .iter()
                .filter(|w| !grams.contains(w.as_slice()))
                .count();
            why.push(format!(
                "{stray} normal words of length {probe_hi} are not factors of the source window"
            ));
        }
        if why.is_empty() {
            why.push(format!(
                "{hi_unexplained} of {} words at length {probe_hi} fit no periodic family",
                hi_words.len()
            ));
        }
        return Ok(inconclusive(why.join("; "), diag));
    }

    Ok(inconclusive(
        format!(
            "counts stay on the line n + {excess} to length {probe_hi}, but {hi_unexplained} of \
             {} words fit no periodic family and no source is attached to certify a recurrent core",
            hi_words.len()
        ),
        diag,
    ))
}

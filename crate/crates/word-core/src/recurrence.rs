use crate::error::WordError;
use crate::factors::Word;
use crate::source::PrefixSource;
use serde::Serialize;
use std::collections::BTreeMap;

/// Horizon-relative recurrence data. `max_gap[l]` is the largest observed
/// start-to-start distance between consecutive occurrences over all length-l
/// factors, including the tail stretch from the last occurrence to the end
/// of the window (a factor that dies early shows up as a huge gap, not as a
/// small one).
#[derive(Debug, Clone, Serialize)]
pub struct RecurrenceReport {
    pub max_len: usize,
    pub horizon: usize,
    pub every_factor_recurs: bool,
    /// Lexicographically least factor occurring only once, if any.
    pub non_recurring_witness: Option<Word>,
    /// length -> max gap (see type comment).
    pub max_gap: BTreeMap<usize, usize>,
    /// Every factor of every length <= max_len recurs with gap <= horizon/2.
    pub uniformly_recurrent_at_horizon: bool,
}

/// Occurrence-gap scan over the analysis window.
///
/// Enforces horizon >= 10 * max_len: verdicts from thinner windows say more
/// about the window than the word.
pub fn recurrence_report(
    source: &dyn PrefixSource,
    max_len: usize,
    horizon: usize,
) -> Result<RecurrenceReport, WordError> {
    if max_len == 0 || horizon < 10 * max_len {
        return Err(WordError::HorizonGuard {
            horizon,
            max_n: max_len,
            required: 10 * max_len.max(1),
        });
    }
    let window = source.window(horizon)?;
    let mut report = RecurrenceReport {
        max_len,
        horizon,
        every_factor_recurs: true,
        non_recurring_witness: None,
        max_gap: BTreeMap::new(),
        uniformly_recurrent_at_horizon: true,
    };
    for len in 1..=max_len {
        // last start position for a length-len window
        let last_start = window.len() - len;
        let mut last_seen: BTreeMap<&[u8], usize> = BTreeMap::new();
        let mut gap: BTreeMap<&[u8], usize> = BTreeMap::new();
        let mut counts: BTreeMap<&[u8], usize> = BTreeMap::new();
        for (pos, w) in window.windows(len).enumerate() {
            *counts.entry(w).or_insert(0) += 1;
            if let Some(prev) = last_seen.insert(w, pos) {
                let g = pos - prev;
                let e = gap.entry(w).or_insert(0);
                if g > *e {
                    *e = g;
                }
            }
        }
        let mut worst = 0usize;
        for (w, &last) in &last_seen {
            // Tail: the factor must reappear within this distance to keep
            // its observed gap bound honest.
            let tail = last_start - last;
            let g = gap.get(w).copied().unwrap_or(0).max(tail);
            if g > worst {
                worst = g;
            }
            if counts[w] < 2 {
                report.every_factor_recurs = false;
                if report.non_recurring_witness.is_none() {
                    report.non_recurring_witness = Some(Word(w.to_vec()));
                }
            }
            if counts[w] < 2 || g > horizon / 2 {
                report.uniformly_recurrent_at_horizon = false;
            }
        }
        report.max_gap.insert(len, worst);
    }
    Ok(report)
}

use crate::error::WordError;
use crate::factors::factor_set_of;
use crate::source::PrefixSource;
use serde::Serialize;

/// Subword complexity table. `values[n]` counts distinct length-n factors,
/// `cumulative[n]` sums values[0..=n]; values[0] = 1 for the empty word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub values: Vec<u64>,
    pub cumulative: Vec<u64>,
    pub horizon: usize,
}

impl ComplexityProfile {
    pub fn from_counts(values: Vec<u64>, horizon: usize) -> Self {
        let mut cumulative = Vec::with_capacity(values.len());
        let mut acc = 0u64;
        for &v in &values {
            acc += v;
            cumulative.push(acc);
        }
        ComplexityProfile {
            values,
            cumulative,
            horizon,
        }
    }

    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// Tabulates T(n) for n = 0..=max_n over a window of `horizon` symbols.
///
/// The saturation guard horizon >= 2 * max_n keeps the reported counts
/// plausibly complete; it is a guard, not a proof of saturation.
pub fn complexity(
    source: &dyn PrefixSource,
    max_n: usize,
    horizon: usize,
) -> Result<ComplexityProfile, WordError> {
    if max_n > 0 && horizon < 2 * max_n {
        return Err(WordError::HorizonGuard {
            horizon,
            max_n,
            required: 2 * max_n,
        });
    }
    let window = source.window(horizon)?;
    let mut values = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        values.push(factor_set_of(&window, n, horizon).factors.len() as u64);
    }
    Ok(ComplexityProfile::from_counts(values, horizon))
}

/// Finds the least period p <= max_period for which the window looks
/// eventually periodic: the p-periodic suffix run (w[i] = w[i+p] through the
/// end) is at least 2p long and covers at least half the window. The
/// coverage requirement keeps incidental repetitions at the window edge
/// (every aperiodic word contains squares) from counting as a periodic
/// tail. Returns (tail_start, p).
pub fn eventual_period(window: &[u8], max_period: usize) -> Option<(usize, usize)> {
    for p in 1..=max_period {
        if 2 * p > window.len() {
            return None;
        }
        let mut start = window.len() - p;
        while start > 0 && window[start - 1] == window[start - 1 + p] {
            start -= 1;
        }
        if start + 2 * p <= window.len() && start <= window.len() / 2 {
            return Some((start, p));
        }
    }
    None
}

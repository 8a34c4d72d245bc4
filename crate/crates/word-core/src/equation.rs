use crate::error::WordError;
use crate::factors::Word;
use serde::Serialize;

/// Outcome of solving S·W = W·T for given words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ShiftVerdict {
    /// SW = WT holds and W = s^k · s1 with s = S and s1 a proper prefix of s.
    Holds { s: Word, k: usize, s1: Word },
    Fails,
}

/// Checks SW = WT and, when it holds, decomposes W as S^k · s1 with s1 a
/// proper prefix of S. The decomposition always re-concatenates to W.
pub fn solve_sw_wt(s: &Word, t: &Word, w: &Word) -> Result<ShiftVerdict, WordError> {
    if s.is_empty() || t.is_empty() {
        return Err(WordError::EmptySide);
    }
    if s.len() != t.len() {
        return Err(WordError::LengthMismatch {
            s_len: s.len(),
            t_len: t.len(),
        });
    }
    let mut sw = s.syms().to_vec();
    sw.extend_from_slice(w.syms());
    let mut wt = w.syms().to_vec();
    wt.extend_from_slice(t.syms());
    if sw != wt {
        return Ok(ShiftVerdict::Fails);
    }
    // SW = WT forces W to be periodic with period |S| and each period equal
    // to S itself (compare SW and WT position by position).
    let k = w.len() / s.len();
    let s1 = Word(w.syms()[k * s.len()..].to_vec());
    debug_assert!({
        let mut rebuilt = Vec::new();
        for _ in 0..k {
            rebuilt.extend_from_slice(s.syms());
        }
        rebuilt.extend_from_slice(s1.syms());
        rebuilt == w.syms()
    });
    Ok(ShiftVerdict::Holds {
        s: s.clone(),
        k,
        s1,
    })
}

/// Least p >= 1 with w[i] = w[i-p] for all i >= p. The whole length for an
/// aperiodic word.
pub fn minimal_period(w: &[u8]) -> usize {
    'outer: for p in 1..=w.len() {
        for i in p..w.len() {
            if w[i] != w[i - p] {
                continue 'outer;
            }
        }
        return p;
    }
    w.len().max(1)
}

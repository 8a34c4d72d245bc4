use crate::error::WordError;
use crate::factors::{factor_set_of, Word};
use crate::source::PrefixSource;
use serde::Serialize;

/// Extension data for one factor: which symbols can precede/follow it in the
/// window. Valence = number of extensions; special means valence >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialFactor {
    pub factor: Word,
    pub left_extensions: Vec<u8>,
    pub right_extensions: Vec<u8>,
    pub left_valence: usize,
    pub right_valence: usize,
    pub is_left_special: bool,
    pub is_right_special: bool,
    pub is_bispecial: bool,
}

/// Extension profile of every length-n factor, in lexicographic order.
pub fn special_factors(
    source: &dyn PrefixSource,
    n: usize,
    horizon: usize,
) -> Result<Vec<SpecialFactor>, WordError> {
    if horizon < n + 1 {
        return Err(WordError::HorizonTooSmall {
            horizon,
            needed: n + 1,
        });
    }
    let window = source.window(horizon)?;
    let base = factor_set_of(&window, n, horizon);
    let extended = factor_set_of(&window, n + 1, horizon);
    let mut out = Vec::with_capacity(base.factors.len());
    for f in &base.factors {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for e in &extended.factors {
            if &e.syms()[1..] == f.syms() {
                left.push(e.syms()[0]);
            }
            if &e.syms()[..n] == f.syms() {
                right.push(e.syms()[n]);
            }
        }
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        let (lv, rv) = (left.len(), right.len());
        out.push(SpecialFactor {
            factor: f.clone(),
            left_extensions: left,
            right_extensions: right,
            left_valence: lv,
            right_valence: rv,
            is_left_special: lv >= 2,
            is_right_special: rv >= 2,
            is_bispecial: lv >= 2 && rv >= 2,
        });
    }
    Ok(out)
}

use crate::algebra::{level_iterate, MonomialAlgebra, ResourceBudget};
use crate::error::AlgebraError;
use serde::Serialize;
use std::collections::BTreeSet;

/// Growth tables of a monomial algebra. t[n] counts normal words of length
/// n, v[n] the dimension of the degree-<=n slice, t_rl[n] the good words:
/// normal words extendable by `margin` symbols on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthProfile {
    #[serde(rename = "T")]
    pub t: Vec<u64>,
    #[serde(rename = "V")]
    pub v: Vec<u64>,
    #[serde(rename = "T_RL")]
    pub t_rl: Vec<u64>,
    #[serde(rename = "maxN")]
    pub max_n: usize,
    pub margin: usize,
}

/// Tabulates T, V and T_RL up to max_n. A word is good at margin M exactly
/// when it is the middle slice of a normal word of length |w| + 2M
/// (normality is factor-closed, so two-sided M-extensions can be trimmed to
/// exactly M), so one enumeration pass to max_n + 2M covers everything.
pub fn growth_profile(
    alg: &MonomialAlgebra,
    max_n: usize,
    margin: usize,
    budget: &ResourceBudget,
) -> Result<GrowthProfile, AlgebraError> {
    let top = max_n + 2 * margin;
    if !alg.complete_up_to(top) {
        return Err(AlgebraError::TruncationTooShallow {
            depth: alg.truncation_depth().expect("incomplete implies truncated"),
            needed: top,
        });
    }
    let mut t = vec![0u64; max_n + 1];
    let mut t_rl = vec![0u64; max_n + 1];
    level_iterate(alg, top, budget, |len, words| {
        if len <= max_n {
            t[len] = words.len() as u64;
        }
        if len >= 2 * margin && len - 2 * margin <= max_n {
            let n = len - 2 * margin;
            let middles: BTreeSet<&[u8]> =
                words.iter().map(|w| &w[margin..margin + n]).collect();
            t_rl[n] = middles.len() as u64;
        }
    })?;
    let mut v = Vec::with_capacity(max_n + 1);
    let mut sum = 0u64;
    for &count in &t {
        sum += count;
        v.push(sum);
    }
    Ok(GrowthProfile {
        t,
        v,
        t_rl,
        max_n,
        margin,
    })
}

/// Growth reading of a finite table. Horizon-relative by construction: the
/// window is the final third of the table, and the tags say "evidence", not
/// theorem. Precedence on overlap: finite dimension, then eventually
/// constant T, then constant T - n, then strictly growing T - n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(
    tag = "verdict",
    rename_all = "SCREAMING_SNAKE_CASE",
    rename_all_fields = "camelCase"
)]
pub enum BoundaryVerdict {
    FiniteDimEvidence { first_zero: usize },
    SlowGrowth { level: u64 },
    BoundaryAtHorizon { excess: i64 },
    SuperlinearEvidence,
    Unclassified,
}

impl BoundaryVerdict {
    pub fn is_boundary(&self) -> bool {
        matches!(self, BoundaryVerdict::BoundaryAtHorizon { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BoundaryVerdict::FiniteDimEvidence { .. } => "FINITE_DIM_EVIDENCE",
            BoundaryVerdict::SlowGrowth { .. } => "SLOW_GROWTH",
            BoundaryVerdict::BoundaryAtHorizon { .. } => "BOUNDARY_AT_HORIZON",
            BoundaryVerdict::SuperlinearEvidence => "SUPERLINEAR_EVIDENCE",
            BoundaryVerdict::Unclassified => "UNCLASSIFIED",
        }
    }
}

impl std::fmt::Display for BoundaryVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryVerdict::BoundaryAtHorizon { excess } => {
                write!(f, "BOUNDARY_AT_HORIZON({excess})")
            }
            BoundaryVerdict::SlowGrowth { level } => write!(f, "SLOW_GROWTH({level})"),
            BoundaryVerdict::FiniteDimEvidence { first_zero } => {
                write!(f, "FINITE_DIM_EVIDENCE(n={first_zero})")
            }
            other => f.write_str(other.tag()),
        }
    }
}

pub fn boundary_verdict(profile: &GrowthProfile) -> Result<BoundaryVerdict, AlgebraError> {
    if let Some(first_zero) = profile.t.iter().position(|&c| c == 0) {
        return Ok(BoundaryVerdict::FiniteDimEvidence { first_zero });
    }
    if profile.max_n < 8 {
        return Err(AlgebraError::TableTooShort {
            max_n: profile.max_n,
            needed: 8,
        });
    }
    let start = profile.max_n - profile.max_n / 3;
    let window = &profile.t[start..];
    let excess = |i: usize| window[i] as i64 - (start + i) as i64;
    if window.iter().all(|&c| c == window[0]) {
        return Ok(BoundaryVerdict::SlowGrowth { level: window[0] });
    }
    if (1..window.len()).all(|i| excess(i) == excess(0)) {
        return Ok(BoundaryVerdict::BoundaryAtHorizon { excess: excess(0) });
    }
    if (1..window.len()).all(|i| excess(i) > excess(i - 1)) {
        return Ok(BoundaryVerdict::SuperlinearEvidence);
    }
    Ok(BoundaryVerdict::Unclassified)
}

/// First differences of the good-word table, with the two flag sets the
/// slow-growth criterion cares about: a zero difference anywhere, and the
/// unit differences consistent with a boundary table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GoodWordDelta {
    /// deltas[n] = T_RL(n+1) - T_RL(n).
    pub deltas: Vec<i64>,
    pub zero_positions: Vec<usize>,
    pub one_positions: Vec<usize>,
    pub slow_growth_trigger: bool,
}

pub fn good_word_delta(profile: &GrowthProfile) -> GoodWordDelta {
    let deltas: Vec<i64> = profile
        .t_rl
        .windows(2)
        .map(|pair| pair[1] as i64 - pair[0] as i64)
        .collect();
    let zero_positions: Vec<usize> = deltas
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(n, _)| n)
        .collect();
    let one_positions: Vec<usize> = deltas
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 1)
        .map(|(n, _)| n)
        .collect();
    GoodWordDelta {
        slow_growth_trigger: !zero_positions.is_empty(),
        deltas,
        zero_positions,
        one_positions,
    }
}

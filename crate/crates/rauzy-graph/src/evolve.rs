use crate::error::GraphError;
use crate::graph::build_rauzy;
use crate::profile::{follower_profile, ForkTriple};
use crate::scc::strong_components;
use crate::shape::{classify_shape, ForkProfile};
use serde::Serialize;
use word_core::{PrefixSource, WordError};

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceRow {
    pub k: usize,
    #[serde(flatten)]
    pub profile: ForkProfile,
    pub strongly_connected: bool,
    /// True when the window is long enough (10k) for the k-graph to be
    /// trusted; factors can still be missing below that.
    pub saturated: bool,
    /// Whether this profile is one of the follower candidates of the
    /// previous row. None when the check does not apply (first row,
    /// non-fork predecessor, or either row unsaturated).
    pub consistent_with_previous: Option<bool>,
}

/// Classifies the k-graphs for k in [k_from, k_to] and cross-checks each
/// consecutive fork pair against the follower step. The horizon must reach
/// k_to + 1 so every graph has at least one edge; rows below the 10k
/// saturation mark are kept but flagged.
pub fn evolution_trace(
    source: &dyn PrefixSource,
    k_from: usize,
    k_to: usize,
    horizon: usize,
) -> Result<Vec<TraceRow>, GraphError> {
    if k_from == 0 || k_from > k_to {
        return Err(GraphError::KRange {
            from: k_from,
            to: k_to,
        });
    }
    if horizon < k_to + 1 {
        return Err(WordError::HorizonTooSmall {
            horizon,
            needed: k_to + 1,
        }
        .into());
    }

    let mut rows: Vec<TraceRow> = Vec::with_capacity(k_to - k_from + 1);
    for k in k_from..=k_to {
        let g = build_rauzy(source, k, horizon)?;
        let profile = classify_shape(&g);
        let strongly_connected = strong_components(&g).strongly_connected;
        let saturated = horizon >= 10 * k;

        let consistent_with_previous = rows.last().and_then(|prev| {
            if !prev.saturated || !saturated {
                return None;
            }
            let candidates = follower_profile(&prev.profile).ok()?;
            Some(match profile {
                ForkProfile::StronglyConnectedFork { l, r, s } => {
                    let cur = ForkTriple::new(l, r, s);
                    candidates.iter().any(|c| c.matches_unordered(&cur))
                }
                // A fork was predicted; any other shape is a violation.
                _ => false,
            })
        });

        rows.push(TraceRow {
            k,
            profile,
            strongly_connected,
            saturated,
            consistent_with_previous,
        });
    }
    Ok(rows)
}

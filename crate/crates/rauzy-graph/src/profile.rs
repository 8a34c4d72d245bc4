use crate::error::GraphError;
use crate::shape::ForkProfile;
use serde::Serialize;

/// Bare (l, r, s) numeric profile of a strongly connected fork graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ForkTriple {
    pub l: usize,
    pub r: usize,
    pub s: usize,
}

impl ForkTriple {
    pub fn new(l: usize, r: usize, s: usize) -> Self {
        ForkTriple { l, r, s }
    }

    /// Equality with the arcs taken as an unordered pair. Classification
    /// orders arcs by witness, so two traces of the same graph may report
    /// (l, r, s) and (l, s, r).
    pub fn matches_unordered(&self, other: &ForkTriple) -> bool {
        self.l == other.l
            && (self.r.min(self.s), self.r.max(self.s))
                == (other.r.min(other.s), other.r.max(other.s))
    }
}

impl std::fmt::Display for ForkTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.l, self.r, self.s)
    }
}

/// Which collapse formula applies to a (l, r, 1) profile with r > 1 when
/// stepping backwards. `Standard` inverts the forward step exactly;
/// `Variant` grows the unit arc instead of the long one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PredecessorRule {
    /// (l, r, 1) -> (0, r+1, l-1).
    #[default]
    Standard,
    /// (l, r, 1) -> (0, s+1, l-1), s being the unit arc.
    Variant,
}

fn fork_triple(p: &ForkProfile) -> Result<ForkTriple, GraphError> {
    match *p {
        ForkProfile::StronglyConnectedFork { l, r, s } => Ok(ForkTriple { l, r, s }),
        _ => Err(GraphError::NotFork),
    }
}

/// Profiles the successor graph can take. A positive barrier shrinks by
/// one while both arcs grow; with no barrier the split vertex sits on both
/// arcs and either arc can host the new barrier, so both outcomes are
/// returned (the word, not the graph, decides which one occurs).
pub fn follower_profile(p: &ForkProfile) -> Result<Vec<ForkTriple>, GraphError> {
    let t = fork_triple(p)?;
    if t.r == 1 && t.s == 1 {
        return Err(GraphError::ImpossibleProfile);
    }
    if t.l >= 1 {
        Ok(vec![ForkTriple::new(t.l - 1, t.r + 1, t.s + 1)])
    } else {
        Ok(vec![
            ForkTriple::new(t.s - 1, 1, t.r + 1),
            ForkTriple::new(t.r - 1, 1, t.s + 1),
        ])
    }
}

/// The unique profile whose follower step yields `p`. Errors when both
/// arcs are 1 (no such graph exists) and when the collapse formula would
/// need an arc of length < 1 (no representable predecessor).
pub fn predecessor_profile(
    p: &ForkProfile,
    rule: PredecessorRule,
) -> Result<ForkTriple, GraphError> {
    let t = fork_triple(p)?;
    let (l, r, s) = (t.l, t.r, t.s);
    if r == 1 && s == 1 {
        return Err(GraphError::ImpossibleProfile);
    }
    let pred = if r > 1 && s > 1 {
        ForkTriple::new(l + 1, r - 1, s - 1)
    } else if r == 1 {
        // (l, 1, s), s > 1.
        ForkTriple::new(0, l + 1, s - 1)
    } else {
        // (l, r, 1), r > 1: the collapse case the rule selects.
        if l < 2 {
            return Err(GraphError::NoPredecessor { l, r, s });
        }
        match rule {
            PredecessorRule::Standard => ForkTriple::new(0, r + 1, l - 1),
            PredecessorRule::Variant => ForkTriple::new(0, s + 1, l - 1),
        }
    };
    Ok(pred)
}

use crate::graph::RauzyGraph;
use crate::scc::strong_components;
use serde::Serialize;

/// Coarse shape of a Rauzy graph around its forks.
///
/// `StronglyConnectedFork` reports the barrier length `l` (walk from the
/// in-fork to the out-fork, 0 when they coincide) and the two arc lengths
/// `r`, `s` (walks from the out-fork back to the in-fork). Arcs are listed
/// in lexicographic order of their first edge witness, not sorted by
/// length, so (l, r, s) and (l, s, r) describe the same graph.
///
/// `TwoCyclesWithBridge` covers the non-strongly-connected variant: a
/// cycle of length `p` through the out-fork, a bridge of `t` edges, and a
/// cycle of length `q` through the in-fork.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(
    tag = "shape",
    rename_all = "SCREAMING_SNAKE_CASE",
    rename_all_fields = "camelCase"
)]
pub enum ForkProfile {
    StronglyConnectedFork { l: usize, r: usize, s: usize },
    TwoCyclesWithBridge { p: usize, t: usize, q: usize },
    NoForkCycle { cycle_len: usize },
    Other,
}

impl ForkProfile {
    pub fn shape_name(&self) -> &'static str {
        match self {
            ForkProfile::StronglyConnectedFork { .. } => "STRONGLY_CONNECTED_FORK",
            ForkProfile::TwoCyclesWithBridge { .. } => "TWO_CYCLES_WITH_BRIDGE",
            ForkProfile::NoForkCycle { .. } => "NO_FORK_CYCLE",
            ForkProfile::Other => "OTHER",
        }
    }

    /// The numeric triple, when the shape carries one: (l, r, s) for a
    /// fork, (p, t, q) for two cycles.
    pub fn triple(&self) -> Option<(usize, usize, usize)> {
        match *self {
            ForkProfile::StronglyConnectedFork { l, r, s } => Some((l, r, s)),
            ForkProfile::TwoCyclesWithBridge { p, t, q } => Some((p, t, q)),
            _ => None,
        }
    }
}

impl std::fmt::Display for ForkProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ForkProfile::StronglyConnectedFork { l, r, s } => {
                write!(f, "STRONGLY_CONNECTED_FORK({l}, {r}, {s})")
            }
            ForkProfile::TwoCyclesWithBridge { p, t, q } => {
                write!(f, "TWO_CYCLES_WITH_BRIDGE({p}, {t}, {q})")
            }
            ForkProfile::NoForkCycle { cycle_len } => write!(f, "NO_FORK_CYCLE({cycle_len})"),
            ForkProfile::Other => write!(f, "OTHER"),
        }
    }
}

/// Follows unique out-edges from `start` until hitting a vertex in `stops`;
/// returns (steps taken, stop vertex). Fails on an out-degree != 1 vertex
/// or after `cap` steps, both of which mean the graph is not one of the
/// recognized shapes.
fn walk_to(
    out: &[Vec<usize>],
    edge_to: &[usize],
    start: usize,
    stops: &[usize],
    cap: usize,
) -> Option<(usize, usize)> {
    let mut cur = start;
    let mut steps = 0;
    loop {
        if stops.contains(&cur) {
            return Some((steps, cur));
        }
        if out[cur].len() != 1 || steps >= cap {
            return None;
        }
        cur = edge_to[out[cur][0]];
        steps += 1;
    }
}

pub fn classify_shape(g: &RauzyGraph) -> ForkProfile {
    let n = g.vertex_count();
    if n == 0 {
        return ForkProfile::Other;
    }
    let out = g.out_edges();
    let edge_to: Vec<usize> = g.edges().iter().map(|e| e.to).collect();
    let mut in_deg = vec![0usize; n];
    for e in g.edges() {
        in_deg[e.to] += 1;
    }

    let out_forks: Vec<usize> = (0..n).filter(|&v| out[v].len() >= 2).collect();
    let in_forks: Vec<usize> = (0..n).filter(|&v| in_deg[v] >= 2).collect();
    let sc = strong_components(g).strongly_connected;
    let cap = g.edge_count() + 1;

    if out_forks.is_empty() && in_forks.is_empty() {
        // Only a single cycle has |E| = |V| with every degree (1, 1).
        if sc && g.edge_count() == n && (0..n).all(|v| out[v].len() == 1 && in_deg[v] == 1) {
            return ForkProfile::NoForkCycle { cycle_len: n };
        }
        return ForkProfile::Other;
    }

    if out_forks.len() != 1 || in_forks.len() != 1 || g.edge_count() != n + 1 {
        return ForkProfile::Other;
    }
    let out_fork = out_forks[0];
    let in_fork = in_forks[0];
    if out[out_fork].len() != 2 || in_deg[in_fork] != 2 {
        return ForkProfile::Other;
    }

    if in_fork != out_fork && out[in_fork].len() != 1 {
        return ForkProfile::Other;
    }

    if sc {
        let l = if in_fork == out_fork {
            0
        } else {
            match walk_to(&out, &edge_to, edge_to[out[in_fork][0]], &[out_fork], cap) {
                Some((steps, _)) => steps + 1,
                None => return ForkProfile::Other,
            }
        };
        // out[out_fork] is already in witness-lex order (edges are sorted
        // by witness and collected in order).
        let mut arcs = [0usize; 2];
        for (slot, &e) in out[out_fork].iter().enumerate() {
            match walk_to(&out, &edge_to, edge_to[e], &[in_fork], cap) {
                Some((steps, _)) => arcs[slot] = steps + 1,
                None => return ForkProfile::Other,
            }
        }
        let (r, s) = (arcs[0], arcs[1]);
        if l + r + s != g.edge_count() || (r == 1 && s == 1) {
            return ForkProfile::Other;
        }
        return ForkProfile::StronglyConnectedFork { l, r, s };
    }

    // Not strongly connected: the only remaining recognized shape is two
    // disjoint cycles joined by a bridge running out-fork -> in-fork.
    if in_fork == out_fork {
        return ForkProfile::Other;
    }
    let mut p = None;
    let mut t = None;
    for &e in &out[out_fork] {
        match walk_to(&out, &edge_to, edge_to[e], &[out_fork, in_fork], cap) {
            Some((steps, hit)) if hit == out_fork && p.is_none() => p = Some(steps + 1),
            Some((steps, hit)) if hit == in_fork && t.is_none() => t = Some(steps + 1),
            _ => return ForkProfile::Other,
        }
    }
    let q = match walk_to(&out, &edge_to, edge_to[out[in_fork][0]], &[in_fork], cap) {
        Some((steps, _)) => steps + 1,
        None => return ForkProfile::Other,
    };
    match (p, t) {
        (Some(p), Some(t)) if p + t + q == g.edge_count() && n == g.edge_count() - 1 => {
            ForkProfile::TwoCyclesWithBridge { p, t, q }
        }
        _ => ForkProfile::Other,
    }
}

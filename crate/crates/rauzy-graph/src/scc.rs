use crate::graph::RauzyGraph;
use serde::Serialize;

/// Strongly connected components in reverse topological order of the
/// condensation (Tarjan's invariant: a component is emitted only after
/// everything it reaches).
pub fn tarjan_scc(n: usize, adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    #[derive(Clone, Copy)]
    struct State {
        index: usize,
        lowlink: usize,
        on_stack: bool,
        visited: bool,
    }
    let mut st = vec![
        State {
            index: 0,
            lowlink: 0,
            on_stack: false,
            visited: false,
        };
        n
    ];
    let mut stack = Vec::new();
    let mut next_index = 0usize;
    let mut components = Vec::new();

    // Iterative DFS: (vertex, next child position).
    let mut work: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if st[root].visited {
            continue;
        }
        work.push((root, 0));
        while let Some(&mut (v, ref mut child)) = work.last_mut() {
            if *child == 0 {
                st[v].visited = true;
                st[v].index = next_index;
                st[v].lowlink = next_index;
                next_index += 1;
                stack.push(v);
                st[v].on_stack = true;
            }
            if *child < adj[v].len() {
                let w = adj[v][*child];
                *child += 1;
                if !st[w].visited {
                    work.push((w, 0));
                } else if st[w].on_stack {
                    st[v].lowlink = st[v].lowlink.min(st[w].index);
                }
            } else {
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    let low = st[v].lowlink;
                    st[parent].lowlink = st[parent].lowlink.min(low);
                }
                if st[v].lowlink == st[v].index {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        st[w].on_stack = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    components.push(comp);
                }
            }
        }
    }
    components
}

#[derive(Debug, Clone, Serialize)]
pub struct SccReport {
    /// Vertex-index partition, reverse topological order.
    pub components: Vec<Vec<usize>>,
    pub strongly_connected: bool,
}

pub fn strong_components(g: &RauzyGraph) -> SccReport {
    let components = tarjan_scc(g.vertex_count(), &g.adjacency());
    let strongly_connected = components.len() == 1 && g.vertex_count() > 0;
    SccReport {
        components,
        strongly_connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_single_component() {
        let comps = tarjan_scc(2, &[vec![1], vec![0]]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], vec![0, 1]);
    }

    #[test]
    fn chain_components_in_reverse_topological_order() {
        // 0 -> 1 -> 2, no cycles: three singleton components, sinks first.
        let comps = tarjan_scc(3, &[vec![1], vec![2], vec![]]);
        assert_eq!(comps, vec![vec![2], vec![1], vec![0]]);
    }

    #[test]
    fn two_cycles_with_bridge_components() {
        // 0<->1 and 3<->4 cycles, bridge 1 -> 2 -> 3.
        let adj = vec![vec![1], vec![0, 2], vec![3], vec![4], vec![3]];
        let comps = tarjan_scc(5, &adj);
        assert_eq!(comps.len(), 3);
        assert!(comps.contains(&vec![0, 1]));
        assert!(comps.contains(&vec![2]));
        assert!(comps.contains(&vec![3, 4]));
    }
}

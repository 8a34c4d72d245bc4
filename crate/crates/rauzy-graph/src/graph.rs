use crate::error::GraphError;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use word_core::{factors, Alphabet, PrefixSource, Word, WordError};

/// Directed edge; `from`/`to` index into the graph's vertex list and the
/// witness is the length-(k+1) factor that induced the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyEdge {
    pub from: usize,
    pub to: usize,
    pub witness: Word,
}

/// Rauzy graph at factor length k. Vertices are sorted lexicographically
/// and edges by witness, so equal factor sets build identical graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    pub k: usize,
    pub source_horizon: usize,
    alphabet: Alphabet,
    vertices: Vec<Word>,
    edges: Vec<RauzyEdge>,
}

impl RauzyGraph {
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[RauzyEdge] {
        &self.edges
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Adjacency lists over vertex indices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        adj
    }

    pub(crate) fn out_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            out[e.from].push(i);
        }
        out
    }

    /// Structural equality under the edge-witness identification: same k,
    /// same vertex list, same (from, to, witness) triples.
    pub fn coherent_with(&self, other: &RauzyGraph) -> bool {
        self.k == other.k && self.vertices == other.vertices && self.edges == other.edges
    }

    /// Deterministic DOT rendering; diffable across runs.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph rauzy_k{} {{", self.k);
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", v.render(&self.alphabet));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.from].render(&self.alphabet),
                self.vertices[e.to].render(&self.alphabet),
                e.witness.render(&self.alphabet)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the Rauzy graph at length k from the window at `horizon`.
pub fn build_rauzy(
    source: &dyn PrefixSource,
    k: usize,
    horizon: usize,
) -> Result<RauzyGraph, GraphError> {
    if horizon < k + 1 {
        return Err(GraphError::Word(WordError::HorizonTooSmall {
            horizon,
            needed: k + 1,
        }));
    }
    let vertex_set = factors(source, k, horizon)?;
    let witness_set = factors(source, k + 1, horizon)?;
    let vertices: Vec<Word> = vertex_set.factors.into_iter().collect();
    let index: BTreeMap<&Word, usize> = vertices.iter().zip(0..).collect();
    let mut edges = Vec::with_capacity(witness_set.factors.len());
    for w in &witness_set.factors {
        let prefix = Word(w.syms()[..k].to_vec());
        let suffix = Word(w.syms()[1..].to_vec());
        // Factor closure of the window guarantees both ends are vertices.
        edges.push(RauzyEdge {
            from: index[&prefix],
            to: index[&suffix],
            witness: w.clone(),
        });
    }
    Ok(RauzyGraph {
        k,
        source_horizon: horizon,
        alphabet: source.alphabet().clone(),
        vertices,
        edges,
    })
}

/// Line graph: vertices are the edges of g (named by their witnesses), with
/// an edge A -> B whenever A ends where B starts. Witnesses of the new edges
/// are synthesized by overlapping the two old witnesses, independent of any
/// word.
pub fn follower(g: &RauzyGraph) -> RauzyGraph {
    let vertices: Vec<Word> = g.edges.iter().map(|e| e.witness.clone()).collect();
    // build_rauzy emits edges sorted by witness, so this vertex list is
    // already sorted; keep an index map for the general case.
    let index: BTreeMap<&Word, usize> = vertices.iter().zip(0..).collect();
    let mut by_from: Vec<Vec<usize>> = vec![Vec::new(); g.vertices.len()];
    for (i, e) in g.edges.iter().enumerate() {
        by_from[e.from].push(i);
    }
    let mut edges = Vec::new();
    for a in &g.edges {
        for &bi in &by_from[a.to] {
            let b = &g.edges[bi];
            let mut witness = a.witness.syms().to_vec();
            witness.push(*b.witness.syms().last().expect("witness nonempty"));
            edges.push(RauzyEdge {
                from: index[&a.witness],
                to: index[&b.witness],
                witness: Word(witness),
            });
        }
    }
    edges.sort_by(|x, y| x.witness.cmp(&y.witness));
    RauzyGraph {
        k: g.k + 1,
        source_horizon: g.source_horizon,
        alphabet: g.alphabet.clone(),
        vertices,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use word_core::{PeriodicSource, SubstitutionSource};

    fn fib() -> SubstitutionSource {
        SubstitutionSource::parse(&Alphabet::binary(), &[("a", "ab"), ("b", "a")], 'a').unwrap()
    }

    #[test]
    fn alternating_two_cycle() {
        let src = PeriodicSource::parse(&Alphabet::binary(), "ab").unwrap();
        let g = build_rauzy(&src, 1, 20).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        let al = g.alphabet().clone();
        let labels: Vec<String> = g.edges().iter().map(|e| e.witness.render(&al)).collect();
        assert_eq!(labels, ["ab", "ba"]);
    }

    #[test]
    fn constant_word_loop() {
        let al = Alphabet::new(['a']).unwrap();
        let src = PeriodicSource::parse(&al, "a").unwrap();
        let g = build_rauzy(&src, 2, 20).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0].from, g.edges()[0].to);
    }

    #[test]
    fn fibonacci_k2() {
        let g = build_rauzy(&fib(), 2, 50).unwrap();
        let al = g.alphabet().clone();
        let verts: Vec<String> = g.vertices().iter().map(|v| v.render(&al)).collect();
        assert_eq!(verts, ["aa", "ab", "ba"]);
        let wits: Vec<String> = g.edges().iter().map(|e| e.witness.render(&al)).collect();
        assert_eq!(wits, ["aab", "aba", "baa", "bab"]);
    }

    #[test]
    fn follower_of_two_cycle_is_two_cycle() {
        let src = PeriodicSource::parse(&Alphabet::binary(), "ab").unwrap();
        let g = build_rauzy(&src, 1, 20).unwrap();
        let f = follower(&g);
        assert_eq!(f.vertex_count(), 2);
        assert_eq!(f.edge_count(), 2);
        assert!(f.edges().iter().all(|e| e.from != e.to));
    }

    fn edge_triples(g: &RauzyGraph) -> std::collections::BTreeSet<(Word, Word, Word)> {
        g.edges()
            .iter()
            .map(|e| {
                (
                    g.vertices()[e.from].clone(),
                    g.vertices()[e.to].clone(),
                    e.witness.clone(),
                )
            })
            .collect()
    }

    // The next graph always embeds in the line graph; they coincide except
    // when both forks sit on one vertex, where the line graph keeps one
    // composition the word does not realize.
    #[test]
    fn follower_contains_next_graph() {
        // Fibonacci forks coincide at k = 1, 3, 6 in this range.
        let degenerate = [1, 3, 6];
        for k in 1..=8 {
            let g = build_rauzy(&fib(), k, 200).unwrap();
            let next = build_rauzy(&fib(), k + 1, 200).unwrap();
            let f = follower(&g);
            assert_eq!(f.k, next.k);
            assert_eq!(f.vertices(), next.vertices(), "k = {}", k);
            let ft = edge_triples(&f);
            let nt = edge_triples(&next);
            assert!(ft.is_superset(&nt), "k = {}", k);
            if degenerate.contains(&k) {
                assert_eq!(ft.len(), nt.len() + 1, "k = {}", k);
            } else {
                assert!(f.coherent_with(&next), "k = {}", k);
            }
        }
    }

    // Splitting a degenerate barrier doubles the forks in the line graph.
    #[test]
    fn degenerate_barrier_follower_has_double_forks() {
        let g = build_rauzy(&fib(), 3, 200).unwrap();
        let f = follower(&g);
        let mut out_deg = vec![0usize; f.vertex_count()];
        let mut in_deg = vec![0usize; f.vertex_count()];
        for e in f.edges() {
            out_deg[e.from] += 1;
            in_deg[e.to] += 1;
        }
        assert_eq!(out_deg.iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(in_deg.iter().filter(|&&d| d == 2).count(), 2);
    }

    #[test]
    fn dot_deterministic() {
        let g = build_rauzy(&fib(), 2, 50).unwrap();
        let d1 = g.to_dot();
        let d2 = build_rauzy(&fib(), 2, 50).unwrap().to_dot();
        assert_eq!(d1, d2);
        assert!(d1.contains("\"aa\" -> \"ab\" [label=\"aab\"]"));
    }
}

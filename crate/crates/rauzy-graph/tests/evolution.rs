use rauzy_graph::{
    build_rauzy, classify_shape, evolution_trace, strong_components, ForkProfile,
};
use word_core::{
    complexity, Alphabet, EventuallyPeriodicSource, PeriodicSource, PrefixSource,
    SubstitutionSource, TwoSidedSource,
};

fn fib() -> SubstitutionSource {
    SubstitutionSource::parse(&Alphabet::binary(), &[("a", "ab"), ("b", "a")], 'a').unwrap()
}

/// Left tail a^inf, then one c, then right tail b^inf.
fn two_tailed() -> TwoSidedSource {
    let abc = Alphabet::new(vec!['a', 'b', 'c']).unwrap();
    let forward = EventuallyPeriodicSource::new(abc.clone(), vec![2], vec![1]).unwrap();
    let backward = PeriodicSource::new(abc, vec![0]).unwrap();
    TwoSidedSource::new(Box::new(forward), Box::new(backward)).unwrap()
}

#[test]
fn fibonacci_profiles_k1_to_k13() {
    let expected = [
        (0, 1, 2),
        (1, 2, 1),
        (0, 3, 2),
        (2, 1, 3),
        (1, 2, 4),
        (0, 3, 5),
        (4, 4, 1),
        (3, 5, 2),
        (2, 6, 3),
        (1, 7, 4),
        (0, 8, 5),
        (7, 1, 6),
        (6, 2, 7),
    ];
    let rows = evolution_trace(&fib(), 1, 13, 2000).unwrap();
    for (row, &(l, r, s)) in rows.iter().zip(&expected) {
        assert_eq!(
            row.profile,
            ForkProfile::StronglyConnectedFork { l, r, s },
            "at k={}",
            row.k
        );
        assert!(row.saturated && row.strongly_connected);
        if row.k > 1 {
            assert_eq!(row.consistent_with_previous, Some(true), "at k={}", row.k);
        }
    }
}

#[test]
fn graph_sizes_match_complexity() {
    let src = fib();
    let profile = complexity(&src, 14, 2000).unwrap();
    for k in 1..=13 {
        let g = build_rauzy(&src, k, 2000).unwrap();
        assert_eq!(g.vertex_count() as u64, profile.values[k], "vertices at k={k}");
        assert_eq!(g.edge_count() as u64, profile.values[k + 1], "edges at k={k}");
    }
}

#[test]
fn minimal_growth_means_unique_forks() {
    let src = fib();
    for k in 1..=12 {
        let g = build_rauzy(&src, k, 2000).unwrap();
        assert_eq!(g.edge_count(), g.vertex_count() + 1);
        let mut out_deg = vec![0usize; g.vertex_count()];
        let mut in_deg = vec![0usize; g.vertex_count()];
        for e in g.edges() {
            out_deg[e.from] += 1;
            in_deg[e.to] += 1;
        }
        assert_eq!(out_deg.iter().filter(|&&d| d == 2).count(), 1);
        assert_eq!(in_deg.iter().filter(|&&d| d == 2).count(), 1);
        assert!(out_deg.iter().all(|&d| d <= 2) && in_deg.iter().all(|&d| d <= 2));
    }
}

#[test]
fn two_tailed_word_loses_strong_connectivity() {
    let src = two_tailed();
    let g = build_rauzy(&src, 3, 600).unwrap();
    assert_eq!(g.vertex_count(), 5);
    assert_eq!(g.edge_count(), 6);
    assert_eq!(
        classify_shape(&g),
        ForkProfile::TwoCyclesWithBridge { p: 1, t: 4, q: 1 }
    );
    let scc = strong_components(&g);
    assert!(!scc.strongly_connected);
    assert_eq!(scc.components.len(), 5);
    let cyclic: Vec<_> = scc
        .components
        .iter()
        .filter(|c| {
            // A singleton component is cyclic only via a self-loop.
            c.len() > 1 || g.edges().iter().any(|e| e.from == c[0] && e.to == c[0])
        })
        .collect();
    assert_eq!(cyclic.len(), 2);
}

#[test]
fn fibonacci_k3_single_component() {
    let g = build_rauzy(&fib(), 3, 500).unwrap();
    let scc = strong_components(&g);
    assert!(scc.strongly_connected);
    assert_eq!(scc.components.len(), 1);
}

#[test]
fn window_must_cover_tail_factors() {
    // The two-sided window splits backward/forward, so factors crossing the
    // seam (around c) appear only when both halves are materialized.
    let src = two_tailed();
    let w = src.window(10).unwrap();
    let rendered: String = w
        .iter()
        .map(|&i| src.alphabet().symbol(i).unwrap())
        .collect();
    assert_eq!(rendered, "aaaaacbbbb");
}

//! Cross-cutting invariants checked over generated and fixed sources.

use proptest::prelude::*;
use std::collections::BTreeSet;
use word_core::{
    complexity, eventual_period, factor_language, factors, is_balanced, minimal_forbidden_words,
    minimal_period, solve_sw_wt, Alphabet, BalanceVerdict, EventuallyPeriodicSource,
    PeriodicSource, PrefixSource, ShiftVerdict, SubstitutionSource, Word,
};

fn fib() -> SubstitutionSource {
    SubstitutionSource::parse(&Alphabet::binary(), &[("a", "ab"), ("b", "a")], 'a').unwrap()
}

#[test]
fn factorial_closure_holds() {
    let sources: Vec<Box<dyn PrefixSource>> = vec![
        Box::new(fib()),
        Box::new(PeriodicSource::parse(&Alphabet::binary(), "ab").unwrap()),
        Box::new(EventuallyPeriodicSource::parse(&Alphabet::binary(), "aabb", "ab").unwrap()),
    ];
    for src in &sources {
        for n in 1..=8usize {
            let cur = factors(src.as_ref(), n, 200).unwrap();
            let prev = factors(src.as_ref(), n - 1, 200).unwrap();
            for f in &cur.factors {
                for sub in [&f.syms()[1..], &f.syms()[..n - 1]] {
                    assert!(prev.factors.contains(&Word(sub.to_vec())));
                }
            }
        }
    }
}

#[test]
fn complexity_bounds_hold() {
    let profile = complexity(&fib(), 12, 200).unwrap();
    let a = 2u64;
    for n in 1..=12usize {
        let t = profile.values[n];
        assert!(t >= 1);
        assert!(t <= a * profile.values[n - 1]);
        assert!(t <= a.pow(n as u32));
    }
}

#[test]
fn sturmian_cross_property() {
    // T(n) = n+1 throughout implies balanced at the same range.
    let n = 20;
    let profile = complexity(&fib(), n, 10_000).unwrap();
    for k in 1..=n {
        assert_eq!(profile.values[k], k as u64 + 1);
    }
    assert_eq!(
        is_balanced(&fib(), n, 10_000).unwrap(),
        BalanceVerdict::Balanced
    );
    // Balanced aperiodic binary source has T(n) <= n+1.
    let window = fib().prefix(10_000).unwrap();
    assert_eq!(eventual_period(&window, 200), None);
    for k in 1..=n {
        assert!(profile.values[k] <= k as u64 + 1);
    }
}

#[test]
fn periodic_detector_agrees_with_complexity_plateau() {
    // T(n) = T(n+1) at a saturated n forces an eventually periodic window
    // with period <= T(n).
    let al = Alphabet::binary();
    let sources = [("ab", ""), ("ab", "aabb"), ("aab", "b"), ("abbab", "ba")];
    for (cycle, head) in sources {
        let src = EventuallyPeriodicSource::parse(&al, head, cycle).unwrap();
        let profile = complexity(&src, 12, 400).unwrap();
        for n in 1..12 {
            if profile.values[n] == profile.values[n + 1] {
                let window = src.window(400).unwrap();
                let (_, p) = eventual_period(&window, profile.values[n] as usize)
                    .expect("plateau implies an eventually periodic window");
                assert!(p as u64 <= profile.values[n]);
                break;
            }
        }
    }
}

#[test]
fn mfw_disjoint_from_language_and_reducible() {
    let lang = factor_language(&fib(), 8, 500).unwrap();
    let mfw = minimal_forbidden_words(&lang).unwrap();
    for w in &mfw {
        assert!(!lang.contains(w));
        let head = Word(w.syms()[..w.len() - 1].to_vec());
        let tail = Word(w.syms()[1..].to_vec());
        assert!(lang.contains(&head));
        assert!(lang.contains(&tail));
    }
}

#[test]
fn sw_wt_exhaustive_small() {
    // All S, T, W over {a, b} with |S| = |T| <= 3, |W| <= 6.
    fn all_words(n: usize) -> Vec<Word> {
        (0..(1usize << n))
            .map(|bits| Word((0..n).map(|i| ((bits >> i) & 1) as u8).collect()))
            .collect()
    }
    for ls in 1..=3usize {
        for s in all_words(ls) {
            for t in all_words(ls) {
                for lw in 0..=6usize {
                    for w in all_words(lw) {
                        let mut sw = s.syms().to_vec();
                        sw.extend_from_slice(w.syms());
                        let mut wt = w.syms().to_vec();
                        wt.extend_from_slice(t.syms());
                        let verdict = solve_sw_wt(&s, &t, &w).unwrap();
                        match verdict {
                            ShiftVerdict::Holds { s: rs, k, s1 } => {
                                assert_eq!(sw, wt);
                                assert_eq!(rs, s);
                                assert!(s1.len() < s.len());
                                assert_eq!(&s.syms()[..s1.len()], s1.syms());
                                let mut rebuilt = Vec::new();
                                for _ in 0..k {
                                    rebuilt.extend_from_slice(s.syms());
                                }
                                rebuilt.extend_from_slice(s1.syms());
                                assert_eq!(rebuilt, w.syms());
                            }
                            ShiftVerdict::Fails => assert_ne!(sw, wt),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn factor_count_or_periodicity_dichotomy() {
    // For w = v1·u·v2 with |v1| = |v2| = l and any m <= l: either w has at
    // least m+1 distinct factors of length |u|+m, or u has period <= m.
    fn all(n: usize) -> Vec<Vec<u8>> {
        (0..(1usize << n))
            .map(|bits| (0..n).map(|i| ((bits >> i) & 1) as u8).collect())
            .collect()
    }
    for l in 1..=4usize {
        for k in 1..=5usize {
            for m in 1..=l {
                for v1 in all(l) {
                    for u in all(k) {
                        for v2 in all(l) {
                            let mut w = v1.clone();
                            w.extend_from_slice(&u);
                            w.extend_from_slice(&v2);
                            let len = k + m;
                            let distinct: BTreeSet<&[u8]> = w.windows(len).collect();
                            assert!(
                                distinct.len() >= m + 1 || minimal_period(&u) <= m,
                                "v1={:?} u={:?} v2={:?} m={}",
                                v1,
                                u,
                                v2,
                                m
                            );
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn prefix_consistency(n in 1usize..200, m in 1usize..200) {
        let (small, large) = (n.min(m), n.max(m));
        let p_large = fib().prefix(large).unwrap();
        let p_small = fib().prefix(small).unwrap();
        prop_assert_eq!(&p_large[..small], &p_small[..]);
    }

    #[test]
    fn dichotomy_on_longer_words(v1 in proptest::collection::vec(0u8..2, 8),
                                 u in proptest::collection::vec(0u8..2, 5..=8),
                                 v2s in proptest::collection::vec(0u8..2, 8),
                                 m in 1usize..=8) {
        let mut w = v1.clone();
        w.extend_from_slice(&u);
        w.extend_from_slice(&v2s);
        let len = u.len() + m;
        let distinct: BTreeSet<&[u8]> = w.windows(len).collect();
        prop_assert!(distinct.len() >= m + 1 || minimal_period(&u) <= m);
    }
}

//! Factor intervals, block tilings, multi-letter recodings, and endpoint
//! lattice recovery, all checked against word counts from the codings
//! themselves.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rotation_dynamics::{
    block_factors, code, endpoint_lattice, factor_interval, sturmian_recode, sturmian_system,
    Arc, ArcSet, ExactNumber, ExactValue, QuadraticIrrational, RotationError, RotationSystem,
};
use word_core::{complexity, recurrence_report, Alphabet, ExplicitSource, Word};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn golden_system() -> RotationSystem {
    sturmian_system(QuadraticIrrational::golden_conjugate(), None).unwrap()
}

fn w(text: &str) -> Word {
    Word::parse(&Alphabet::binary(), text).unwrap()
}

#[test]
fn single_symbol_interval_is_its_characteristic_set() {
    let sys = golden_system();
    assert_eq!(factor_interval(&sys, &w("a")).unwrap(), *sys.char_set(0).unwrap());
    assert_eq!(factor_interval(&sys, &w("b")).unwrap(), *sys.char_set(1).unwrap());
}

#[test]
fn non_factor_has_empty_interval() {
    let sys = golden_system();
    assert!(factor_interval(&sys, &w("bb")).unwrap().is_empty());
    assert!(factor_interval(&sys, &w("aaa")).unwrap().is_empty());
    assert!(factor_interval(&sys, &w("babab")).unwrap().is_empty());
}

#[test]
fn ab_interval_is_exact() {
    // [0, a) meet T^-1[a, 1) = [0, 1-a): measure 1 - a.
    let sys = golden_system();
    let interval = factor_interval(&sys, &w("ab")).unwrap();
    assert_eq!(interval.measure(), ExactValue::new(sys.alpha(), rat(1), rat(-1)));
    let arcs = interval.arcs();
    assert_eq!(arcs.len(), 1);
    assert_eq!(arcs[0].left, ExactNumber::zero(sys.alpha()));
    assert_eq!(
        arcs[0].right,
        ExactNumber::from_parts(sys.alpha(), rat(1), rat(-1))
    );
}

/// Interval length vs occurrence counting at horizon 10^4: the relative gap
/// must stay within 1/50, decided in exact arithmetic.
#[test]
fn interval_measure_tracks_occurrence_frequency() {
    let sys = golden_system();
    let word = code(&sys, 10_000).unwrap();
    for text in ["a", "b", "ab", "ba", "aba", "abaab"] {
        let needle = w(text);
        let measure = factor_interval(&sys, &needle).unwrap().measure();
        let positions = word.len() - needle.len() + 1;
        let count = word
            .windows(needle.len())
            .filter(|win| *win == needle.syms())
            .count();
        let freq = ExactValue::new(
            sys.alpha(),
            BigRational::new(BigInt::from(count), BigInt::from(positions)),
            rat(0),
        );
        let gap = measure.sub(&freq);
        let slack = ExactValue::new(
            sys.alpha(),
            measure.p() / BigInt::from(50),
            measure.q() / BigInt::from(50),
        );
        assert_ne!(
            slack.sub(&gap).sign(),
            std::cmp::Ordering::Less,
            "{text}: gap above slack"
        );
        assert_ne!(
            slack.add(&gap).sign(),
            std::cmp::Ordering::Less,
            "{text}: gap below -slack"
        );
    }
}

#[test]
fn block_intervals_tile_the_circle() {
    let sys = golden_system();
    let word = code(&sys, 2000).unwrap();
    for n in 1..=8usize {
        let blocks = block_factors(&sys, n).unwrap();
        assert_eq!(blocks.len(), n + 1, "length {n}");

        // The listed words are exactly the factors seen in the coding.
        let listed: BTreeSet<&Word> = blocks.iter().map(|(bw, _)| bw).collect();
        let seen: BTreeSet<Word> = word
            .windows(n)
            .map(|win| Word(win.to_vec()))
            .collect();
        assert_eq!(listed, seen.iter().collect::<BTreeSet<_>>(), "length {n}");

        // Pairwise disjoint, and the union is the whole circle.
        let mut union = ArcSet::empty(sys.alpha());
        for (i, (_, ivl)) in blocks.iter().enumerate() {
            for (_, other) in &blocks[i + 1..] {
                assert!(ivl.intersect(other).is_empty(), "overlap at length {n}");
            }
            union = union.union(ivl);
        }
        assert!(union.is_full_circle(), "gap at length {n}");
    }
}

#[test]
fn identity_recoding_returns_the_base_system() {
    let sys = golden_system();
    let grouping: BTreeMap<Word, u8> = [(w("a"), 0), (w("b"), 1)].into();
    let recoded = sturmian_recode(&sys, 1, &Alphabet::binary(), &grouping).unwrap();
    assert_eq!(recoded, sys);
}

fn fibonacci_two_block_system() -> RotationSystem {
    let sys = golden_system();
    let abc = Alphabet::new(['x', 'y', 'z']).unwrap();
    let grouping: BTreeMap<Word, u8> = [(w("aa"), 0), (w("ab"), 1), (w("ba"), 2)].into();
    sturmian_recode(&sys, 2, &abc, &grouping).unwrap()
}

fn fibonacci_three_block_system() -> RotationSystem {
    let sys = golden_system();
    let abcd = Alphabet::new(['p', 'q', 'r', 's']).unwrap();
    let grouping: BTreeMap<Word, u8> =
        [(w("aab"), 0), (w("aba"), 1), (w("baa"), 2), (w("bab"), 3)].into();
    sturmian_recode(&sys, 3, &abcd, &grouping).unwrap()
}

#[test]
fn two_block_recoding_has_complexity_n_plus_two() {
    let sys = fibonacci_two_block_system();
    assert_eq!(sys.alphabet().size(), 3);
    let word = code(&sys, 2000).unwrap();
    let src = ExplicitSource::new(sys.alphabet().clone(), word).unwrap();
    let profile = complexity(&src, 30, 2000).unwrap();
    for k in 1..=30usize {
        assert_eq!(profile.values[k], k as u64 + 2, "length {k}");
    }
}

#[test]
fn three_block_recoding_has_complexity_n_plus_three() {
    let sys = fibonacci_three_block_system();
    assert_eq!(sys.alphabet().size(), 4);
    let word = code(&sys, 2000).unwrap();
    let src = ExplicitSource::new(sys.alphabet().clone(), word).unwrap();
    let profile = complexity(&src, 30, 2000).unwrap();
    for k in 1..=30usize {
        assert_eq!(profile.values[k], k as u64 + 3, "length {k}");
    }
}

/// The recoded word is the blockwise reading of the base word, so the two
/// codings must agree letter by letter under the block map.
#[test]
fn recoded_word_is_blockwise_reading_of_base() {
    let base = golden_system();
    let base_word = code(&base, 1001).unwrap();
    let sys = fibonacci_two_block_system();
    let word = code(&sys, 1000).unwrap();
    let block_of = |pair: &[u8]| match pair {
        [0, 0] => 0u8,
        [0, 1] => 1,
        [1, 0] => 2,
        other => panic!("unexpected pair {other:?}"),
    };
    for (i, win) in base_word.windows(2).enumerate() {
        assert_eq!(word[i], block_of(win), "position {i}");
    }
}

#[test]
fn recoded_codings_stay_uniformly_recurrent() {
    for sys in [fibonacci_two_block_system(), fibonacci_three_block_system()] {
        let word = code(&sys, 2000).unwrap();
        let src = ExplicitSource::new(sys.alphabet().clone(), word).unwrap();
        let report = recurrence_report(&src, 15, 2000).unwrap();
        assert!(report.uniformly_recurrent_at_horizon);
    }
}

#[test]
fn recoding_rejects_bad_groupings() {
    let sys = golden_system();
    let abc = Alphabet::new(['x', 'y', 'z']).unwrap();

    // bb is not a factor of the base coding.
    let extra: BTreeMap<Word, u8> =
        [(w("aa"), 0), (w("ab"), 1), (w("ba"), 2), (w("bb"), 2)].into();
    assert!(matches!(
        sturmian_recode(&sys, 2, &abc, &extra),
        Err(RotationError::GroupingExtraWord { .. })
    ));

    // ba left unmapped.
    let missing: BTreeMap<Word, u8> = [(w("aa"), 0), (w("ab"), 1)].into();
    assert!(matches!(
        sturmian_recode(&sys, 2, &abc, &missing),
        Err(RotationError::GroupingMissingFactor { .. })
    ));

    // z receives no block.
    let skewed: BTreeMap<Word, u8> = [(w("aa"), 0), (w("ab"), 1), (w("ba"), 1)].into();
    assert!(matches!(
        sturmian_recode(&sys, 2, &abc, &skewed),
        Err(RotationError::GroupingNotSurjective { symbol: 'z' })
    ));

    // Recoding needs a binary base.
    let three = fibonacci_two_block_system();
    let id: BTreeMap<Word, u8> = BTreeMap::new();
    assert!(matches!(
        sturmian_recode(&three, 1, &abc, &id),
        Err(RotationError::NotSturmianBase)
    ));
}

#[test]
fn sturmian_endpoints_sit_on_the_lattice() {
    let sys = golden_system();
    let entries = endpoint_lattice(&sys, 10);
    let found: BTreeSet<BigInt> = entries
        .iter()
        .map(|e| e.lattice.clone().expect("on lattice"))
        .collect();
    assert_eq!(found, [BigInt::from(0), BigInt::from(1)].into());
}

#[test]
fn recoded_endpoints_stay_within_small_lattice_bound() {
    // Two-block intervals are preimages of {0, a} under at most one rotate,
    // so every endpoint is n*a mod 1 with |n| <= 3.
    let sys = fibonacci_two_block_system();
    let entries = endpoint_lattice(&sys, 3);
    assert!(!entries.is_empty());
    for e in &entries {
        let n = e.lattice.clone().expect("on lattice");
        assert!(n.magnitude() <= &BigInt::from(3).into_parts().1);
    }
}

#[test]
fn rational_endpoint_is_flagged_off_lattice() {
    let angle = QuadraticIrrational::golden_conjugate();
    let alpha = rotation_dynamics::AlphaRef::new(angle);
    let zero = ExactNumber::zero(&alpha);
    let third = ExactNumber::from_parts(&alpha, BigRational::new(1.into(), 3.into()), rat(0));
    let low = ArcSet::from_arcs(&alpha, &[Arc::new(zero.clone(), third.clone()).unwrap()]);
    let high = ArcSet::from_arcs(&alpha, &[Arc::new(third, zero).unwrap()]);
    let sys = RotationSystem::new(
        alpha.clone(),
        ExactNumber::alpha_point(&alpha),
        Alphabet::binary(),
        vec![low, high],
    )
    .unwrap();
    let entries = endpoint_lattice(&sys, 100);
    let lattices: Vec<Option<BigInt>> = entries.into_iter().map(|e| e.lattice).collect();
    assert_eq!(lattices, vec![Some(BigInt::from(0)), None]);
}

#[test]
fn every_point_lands_in_exactly_one_characteristic_set() {
    let sys = fibonacci_three_block_system();
    // Orbit points and a spread of rational points, endpoints included.
    let mut points: Vec<ExactNumber> = (0..200).map(|k| sys.x0().rotate(k)).collect();
    for den in 1..=20i64 {
        for num in 0..den {
            points.push(ExactNumber::from_parts(
                sys.alpha(),
                BigRational::new(num.into(), den.into()),
                rat(0),
            ));
        }
    }
    points.extend(sys.endpoints());
    for x in &points {
        let owners = sys
            .char_sets()
            .iter()
            .filter(|set| set.contains(x))
            .count();
        assert_eq!(owners, 1, "point {x:?}");
    }
}

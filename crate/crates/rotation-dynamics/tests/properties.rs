//! Algebraic laws of the exact arithmetic and the arc-set lattice, checked
//! over generated rational data. Everything here must hold exactly; any
//! tolerance would point at a defect in the integer decision procedures.

use num_rational::BigRational;
use proptest::prelude::*;
use rotation_dynamics::{
    Arc, ArcSet, ExactNumber, ExactValue, QuadraticIrrational,
};
use std::cmp::Ordering;

type AlphaRef = rotation_dynamics::AlphaRef;

fn golden() -> AlphaRef {
    AlphaRef::new(QuadraticIrrational::golden_conjugate())
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// A point p/q + k*alpha, reduced mod 1 by construction.
fn point(alpha: &AlphaRef, num: i64, den: i64, k: i64) -> ExactNumber {
    ExactNumber::from_parts(alpha, ratio(num, den), ratio(k, 1))
}

fn rational_arc_set(alpha: &AlphaRef, cuts: &[(i64, i64)]) -> Option<ArcSet> {
    let mut pts: Vec<ExactNumber> = cuts
        .iter()
        .map(|&(n, d)| point(alpha, n, d, 0))
        .collect();
    pts.sort();
    pts.dedup();
    if pts.len() < 2 {
        return None;
    }
    // Alternate gaps between cut points: in, out, in, ...
    let arcs: Vec<Arc> = pts
        .chunks(2)
        .filter(|pair| pair.len() == 2)
        .map(|pair| Arc::new(pair[0].clone(), pair[1].clone()).unwrap())
        .collect();
    Some(ArcSet::from_arcs(alpha, &arcs))
}

proptest! {
    #[test]
    fn rotation_composes_additively(num in 0i64..97, den in 1i64..97, m in -60i64..60, n in -60i64..60) {
        let alpha = golden();
        let x = point(&alpha, num, den, 0);
        prop_assert_eq!(x.rotate(m).rotate(n), x.rotate(m + n));
        prop_assert_eq!(x.rotate(m).rotate(-m), x);
    }

    #[test]
    fn reduction_lands_in_unit_interval(num in -200i64..200, den in 1i64..50, k in -40i64..40) {
        let alpha = golden();
        let x = point(&alpha, num, den, k);
        let v = x.value();
        prop_assert_ne!(v.sign(), Ordering::Less);
        let one = ExactValue::new(&alpha, ratio(1, 1), ratio(0, 1));
        prop_assert_eq!(one.sub(v).sign(), Ordering::Greater);
        prop_assert_eq!(v.floor(), 0.into());
    }

    #[test]
    fn ordering_agrees_with_subtraction_sign(a in -50i64..50, b in 1i64..30, k in -20i64..20,
                                             c in -50i64..50, d in 1i64..30, j in -20i64..20) {
        let alpha = golden();
        let x = point(&alpha, a, b, k);
        let y = point(&alpha, c, d, j);
        prop_assert_eq!(x.cmp(&y), x.value().sub(y.value()).sign());
    }

    #[test]
    fn union_and_intersection_satisfy_inclusion_exclusion(
        cuts1 in proptest::collection::vec((0i64..64, 1i64..64), 2..8),
        cuts2 in proptest::collection::vec((0i64..64, 1i64..64), 2..8),
    ) {
        let alpha = golden();
        let norm = |cs: &[(i64, i64)]| -> Vec<(i64, i64)> {
            cs.iter().map(|&(n, d)| (n % d, d)).collect()
        };
        let (Some(a), Some(b)) = (
            rational_arc_set(&alpha, &norm(&cuts1)),
            rational_arc_set(&alpha, &norm(&cuts2)),
        ) else {
            return Ok(());
        };
        let lhs = a.union(&b).measure().add(&a.intersect(&b).measure());
        let rhs = a.measure().add(&b.measure());
        prop_assert_eq!(lhs.sub(&rhs).sign(), Ordering::Equal);
    }

    #[test]
    fn membership_distributes_over_lattice_ops(
        cuts1 in proptest::collection::vec((0i64..32, 1i64..32), 2..6),
        cuts2 in proptest::collection::vec((0i64..32, 1i64..32), 2..6),
        px in 0i64..128, pd in 1i64..64, pk in -5i64..5,
    ) {
        let alpha = golden();
        let norm = |cs: &[(i64, i64)]| -> Vec<(i64, i64)> {
            cs.iter().map(|&(n, d)| (n % d, d)).collect()
        };
        let (Some(a), Some(b)) = (
            rational_arc_set(&alpha, &norm(&cuts1)),
            rational_arc_set(&alpha, &norm(&cuts2)),
        ) else {
            return Ok(());
        };
        let x = point(&alpha, px, pd, pk);
        prop_assert_eq!(a.intersect(&b).contains(&x), a.contains(&x) && b.contains(&x));
        prop_assert_eq!(a.union(&b).contains(&x), a.contains(&x) || b.contains(&x));
    }

    #[test]
    fn translation_preserves_measure_and_inverts(
        cuts in proptest::collection::vec((0i64..48, 1i64..48), 2..8),
        dn in -30i64..30, dd in 1i64..30, dk in -8i64..8,
    ) {
        let alpha = golden();
        let norm: Vec<(i64, i64)> = cuts.iter().map(|&(n, d)| (n % d, d)).collect();
        let Some(a) = rational_arc_set(&alpha, &norm) else { return Ok(()) };
        let delta = point(&alpha, dn, dd, dk);
        let back = point(&alpha, -dn, dd, -dk);
        let moved = a.translate(&delta);
        prop_assert_eq!(moved.measure().sub(&a.measure()).sign(), Ordering::Equal);
        prop_assert_eq!(moved.translate(&back), a);
    }
}

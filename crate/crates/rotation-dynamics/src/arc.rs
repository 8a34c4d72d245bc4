use crate::error::RotationError;
use crate::quadratic::{AlphaRef, ExactNumber, ExactValue};
use num_rational::BigRational;
use std::cmp::Ordering;

/// Half-open circle arc [left, right), wrapping across 0 when right sits
/// numerically at or below left. Empty and full-circle arcs are excluded;
/// the full circle only exists as an ArcSet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub left: ExactNumber,
    pub right: ExactNumber,
}

impl Arc {
    pub fn new(left: ExactNumber, right: ExactNumber) -> Result<Arc, RotationError> {
        if left == right {
            return Err(RotationError::DegenerateArc);
        }
        Ok(Arc { left, right })
    }

    /// right - left mod 1, always in (0, 1).
    pub fn length(&self) -> ExactValue {
        let diff = self.right.value().sub(self.left.value());
        if diff.sign() == Ordering::Less {
            diff.add_int(&1.into())
        } else {
            diff
        }
    }

    pub fn wraps(&self) -> bool {
        self.right < self.left
    }
}

/// Line segment [lo, hi] with 0 <= lo < hi <= 1; the trace of a circle
/// arc on the fundamental interval. hi = 1 is meaningful (the seam), which
/// is why endpoints are ExactValue rather than reduced points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Segment {
    pub(crate) lo: ExactValue,
    pub(crate) hi: ExactValue,
}

/// Finite union of arcs in canonical form: line segments sorted by left
/// endpoint, pairwise disjoint and non-touching. Canonical form makes
/// structural equality set equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSet {
    alpha: AlphaRef,
    segments: Vec<Segment>,
}

impl ArcSet {
    pub fn empty(alpha: &AlphaRef) -> ArcSet {
        ArcSet {
            alpha: alpha.clone(),
            segments: Vec::new(),
        }
    }

    pub fn full_circle(alpha: &AlphaRef) -> ArcSet {
        ArcSet {
            alpha: alpha.clone(),
            segments: vec![Segment {
                lo: ExactValue::zero(alpha),
                hi: ExactValue::one(alpha),
            }],
        }
    }

    /// Union of the given arcs (overlaps allowed).
    pub fn from_arcs(alpha: &AlphaRef, arcs: &[Arc]) -> ArcSet {
        let mut segments = Vec::new();
        for arc in arcs {
            push_circle_arc(alpha, &mut segments, &arc.left, &arc.right);
        }
        ArcSet {
            alpha: alpha.clone(),
            segments: normalize(segments),
        }
    }

    pub(crate) fn from_segments(alpha: &AlphaRef, segments: Vec<Segment>) -> ArcSet {
        ArcSet {
            alpha: alpha.clone(),
            segments: normalize(segments),
        }
    }

    pub(crate) fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn alpha(&self) -> &AlphaRef {
        &self.alpha
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn is_full_circle(&self) -> bool {
        self.segments.len() == 1
            && self.segments[0].lo == ExactValue::zero(&self.alpha)
            && self.segments[0].hi == ExactValue::one(&self.alpha)
    }

    /// Total arc length, exact.
    pub fn measure(&self) -> ExactValue {
        let mut acc = ExactValue::zero(&self.alpha);
        for s in &self.segments {
            acc = acc.add(&s.hi.sub(&s.lo));
        }
        acc
    }

    pub fn contains(&self, x: &ExactNumber) -> bool {
        let xv = x.value();
        let idx = self.segments.partition_point(|s| s.lo.cmp(xv) != Ordering::Greater);
        idx > 0 && xv.cmp(&self.segments[idx - 1].hi) == Ordering::Less
    }

    pub fn intersect(&self, other: &ArcSet) -> ArcSet {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.segments.len() && j < other.segments.len() {
            let a = &self.segments[i];
            let b = &other.segments[j];
            let lo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
            let a_ends_first = a.hi <= b.hi;
            let hi = if a_ends_first { a.hi.clone() } else { b.hi.clone() };
            if lo < hi {
                out.push(Segment { lo, hi });
            }
            if a_ends_first {
                i += 1;
            } else {
                j += 1;
            }
        }
        ArcSet::from_segments(&self.alpha, out)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        let mut segs = self.segments.clone();
        segs.extend(other.segments.iter().cloned());
        ArcSet::from_segments(&self.alpha, segs)
    }

    /// The set rotated by delta (every point moved to x + delta mod 1).
    pub fn translate(&self, delta: &ExactNumber) -> ArcSet {
        let mut segs = Vec::new();
        for s in &self.segments {
            if s.lo == ExactValue::zero(&self.alpha) && s.hi == ExactValue::one(&self.alpha) {
                segs.push(s.clone());
                continue;
            }
            let l = s.lo.add(delta.value()).reduce();
            let r = s.hi.add(delta.value()).reduce();
            push_circle_arc(&self.alpha, &mut segs, &l, &r);
        }
        ArcSet::from_segments(&self.alpha, segs)
    }

    /// Circle-arc presentation: wrapping arcs rejoined across the seam.
    /// The full circle is split at 1/2 since a single Arc cannot hold it.
    pub fn arcs(&self) -> Vec<Arc> {
        if self.is_full_circle() {
            let half = ExactNumber::from_parts(
                &self.alpha,
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(0.into()),
            );
            let zero = ExactNumber::zero(&self.alpha);
            return vec![
                Arc {
                    left: zero.clone(),
                    right: half.clone(),
                },
                Arc {
                    left: half,
                    right: zero,
                },
            ];
        }
        let mut arcs: Vec<Arc> = self
            .segments
            .iter()
            .map(|s| Arc {
                left: s.lo.reduce(),
                right: s.hi.reduce(),
            })
            .collect();
        // A segment ending at the seam and one starting at 0 are a single
        // wrapped arc.
        if arcs.len() >= 2 {
            let zero = ExactNumber::zero(&self.alpha);
            let first_at_zero = arcs[0].left == zero;
            let last_at_seam = arcs.last().unwrap().right == zero;
            if first_at_zero && last_at_seam {
                let first = arcs.remove(0);
                let last = arcs.pop().unwrap();
                arcs.push(Arc {
                    left: last.left,
                    right: first.right,
                });
            }
        }
        arcs
    }

    /// Distinct circle points bounding the set; empty for the full circle.
    pub fn circle_endpoints(&self) -> Vec<ExactNumber> {
        if self.is_full_circle() {
            return Vec::new();
        }
        let mut pts = std::collections::BTreeSet::new();
        for arc in self.arcs() {
            pts.insert(arc.left);
            pts.insert(arc.right);
        }
        pts.into_iter().collect()
    }
}

/// Appends the segments of circle arc [left, right) to `segs`.
fn push_circle_arc(
    alpha: &AlphaRef,
    segs: &mut Vec<Segment>,
    left: &ExactNumber,
    right: &ExactNumber,
) {
    let zero = ExactValue::zero(alpha);
    let one = ExactValue::one(alpha);
    match left.cmp(right) {
        Ordering::Less => segs.push(Segment {
            lo: left.value().clone(),
            hi: right.value().clone(),
        }),
        Ordering::Greater => {
            segs.push(Segment {
                lo: left.value().clone(),
                hi: one,
            });
            if right.value().sign() == Ordering::Greater {
                segs.push(Segment {
                    lo: zero,
                    hi: right.value().clone(),
                });
            }
        }
        Ordering::Equal => unreachable!("degenerate arc escaped validation"),
    }
}

/// Sort by left end and merge overlapping or touching segments.
fn normalize(mut segs: Vec<Segment>) -> Vec<Segment> {
    segs.retain(|s| s.lo < s.hi);
    segs.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
    let mut out: Vec<Segment> = Vec::with_capacity(segs.len());
    for s in segs {
        match out.last_mut() {
            Some(last) if s.lo <= last.hi => {
                if s.hi > last.hi {
                    last.hi = s.hi;
                }
            }
            _ => out.push(s),
        }
    }
    out
}

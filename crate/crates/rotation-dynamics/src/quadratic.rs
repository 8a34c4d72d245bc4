use crate::error::RotationError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::Arc as Shared;

/// Largest radicand accepted; square-freeness is checked by trial division.
const RADICAND_BOUND: u64 = 1_000_000_000_000;

/// The rotation angle (a + b*sqrt(d))/c, normalized to c > 0 and
/// gcd(a, b, c) = 1, with d >= 2 square-free and b != 0 so the value is
/// genuinely irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: u64,
}

/// Shared handle tying every exact value to its angle; all values taking
/// part in one comparison must come from the same handle.
pub type AlphaRef = Shared<QuadraticIrrational>;

impl QuadraticIrrational {
    pub fn new(a: i64, b: i64, c: i64, d: u64) -> Result<Self, RotationError> {
        Self::from_bigints(a.into(), b.into(), c.into(), d)
    }

    pub fn from_bigints(a: BigInt, b: BigInt, c: BigInt, d: u64) -> Result<Self, RotationError> {
        if c.is_zero() {
            return Err(RotationError::ZeroDenominator);
        }
        if b.is_zero() || d < 2 {
            return Err(RotationError::RationalAngle);
        }
        if d > RADICAND_BOUND {
            return Err(RotationError::RadicandTooLarge {
                d,
                bound: RADICAND_BOUND,
            });
        }
        let mut rest = d;
        let mut p = 2u64;
        while p * p <= rest {
            if rest % (p * p) == 0 {
                return Err(RotationError::NotSquareFree { d });
            }
            while rest % p == 0 {
                rest /= p;
            }
            p += 1;
        }
        let (mut a, mut b, mut c) = (a, b, c);
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        Ok(QuadraticIrrational { a, b, c, d })
    }

    /// (sqrt(5) - 1)/2, the golden ratio conjugate.
    pub fn golden_conjugate() -> Self {
        Self::new(-1, 1, 2, 5).expect("valid constant")
    }

    /// sqrt(2) - 1.
    pub fn sqrt2_minus_one() -> Self {
        Self::new(-1, 1, 1, 2).expect("valid constant")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> u64 {
        self.d
    }

    /// The angle as u + v*sqrt(d) with u, v rational.
    fn parts(&self) -> (BigRational, BigRational) {
        (
            BigRational::new(self.a.clone(), self.c.clone()),
            BigRational::new(self.b.clone(), self.c.clone()),
        )
    }

    /// Exact sign of the angle relative to the rational threshold t.
    pub fn cmp_rational(&self, t: &BigRational) -> Ordering {
        let (u, v) = self.parts();
        sign_of_quadratic(&(u - t), &v, self.d)
    }
}

/// Exact sign of u + v*sqrt(d) for rational u, v and square-free d >= 2.
fn sign_of_quadratic(u: &BigRational, v: &BigRational, d: u64) -> Ordering {
    match (u.cmp(&BigRational::zero()), v.cmp(&BigRational::zero())) {
        (o, Ordering::Equal) => o,
        (Ordering::Equal, o) => o,
        (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
        (Ordering::Less, Ordering::Less) => Ordering::Less,
        (upos, _) => {
            // Opposite signs: compare u^2 against v^2 d; equality would
            // make sqrt(d) rational, impossible.
            let lhs = u * u;
            let rhs = v * v * BigRational::from_integer(d.into());
            debug_assert_ne!(lhs, rhs, "sqrt({d}) behaved rationally");
            if upos == Ordering::Greater {
                lhs.cmp(&rhs)
            } else {
                rhs.cmp(&lhs)
            }
        }
    }
}

/// p + q*alpha, not reduced; the full line value used for floors,
/// comparisons, and segment endpoints (which may equal 1 exactly).
#[derive(Debug, Clone)]
pub struct ExactValue {
    alpha: AlphaRef,
    p: BigRational,
    q: BigRational,
}

impl ExactValue {
    pub fn new(alpha: &AlphaRef, p: BigRational, q: BigRational) -> Self {
        ExactValue {
            alpha: alpha.clone(),
            p,
            q,
        }
    }

    pub fn zero(alpha: &AlphaRef) -> Self {
        Self::new(alpha, BigRational::zero(), BigRational::zero())
    }

    pub fn one(alpha: &AlphaRef) -> Self {
        Self::new(alpha, BigRational::one(), BigRational::zero())
    }

    /// steps * alpha as a line value.
    pub fn alpha_multiple(alpha: &AlphaRef, steps: i64) -> Self {
        Self::new(
            alpha,
            BigRational::zero(),
            BigRational::from_integer(steps.into()),
        )
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }
    pub fn q(&self) -> &BigRational {
        &self.q
    }
    pub fn alpha(&self) -> &AlphaRef {
        &self.alpha
    }

    fn assert_same_alpha(&self, other: &ExactValue) {
        debug_assert!(
            Shared::ptr_eq(&self.alpha, &other.alpha) || self.alpha == other.alpha,
            "mixed rotation angles in exact arithmetic"
        );
    }

    pub fn add(&self, other: &ExactValue) -> ExactValue {
        self.assert_same_alpha(other);
        ExactValue::new(&self.alpha, &self.p + &other.p, &self.q + &other.q)
    }

    pub fn sub(&self, other: &ExactValue) -> ExactValue {
        self.assert_same_alpha(other);
        ExactValue::new(&self.alpha, &self.p - &other.p, &self.q - &other.q)
    }

    pub fn add_int(&self, n: &BigInt) -> ExactValue {
        ExactValue::new(
            &self.alpha,
            &self.p + BigRational::from_integer(n.clone()),
            self.q.clone(),
        )
    }

    /// The value as u + v*sqrt(d).
    fn quadratic_parts(&self) -> (BigRational, BigRational) {
        let (au, av) = self.alpha.parts();
        (&self.p + &self.q * au, &self.q * av)
    }

    /// Exact sign relative to zero.
    pub fn sign(&self) -> Ordering {
        if self.q.is_zero() {
            return self.p.cmp(&BigRational::zero());
        }
        let (u, v) = self.quadratic_parts();
        sign_of_quadratic(&u, &v, self.alpha.d())
    }

    /// Exact floor via an integer-sqrt bracket on the irrational part,
    /// then sign-checked adjustment.
    pub fn floor(&self) -> BigInt {
        let (u, v) = self.quadratic_parts();
        if v.is_zero() {
            return u.floor().to_integer();
        }
        // |v*sqrt(d)| = sqrt(t) with t = v^2 d = n/m; isqrt(n*m)/m bounds it
        // from below within 1/m.
        let t = &v * &v * BigRational::from_integer(self.alpha.d().into());
        let (n, m) = (t.numer().clone(), t.denom().clone());
        let root = BigRational::new((&n * &m).sqrt(), m);
        let approx = if v.is_positive() { &u + root } else { &u - root };
        let base = approx.floor().to_integer();
        for cand in [&base - 1, base.clone(), &base + 1] {
            let lower = self.sub(&ExactValue::new(
                &self.alpha,
                BigRational::from_integer(cand.clone()),
                BigRational::zero(),
            ));
            let upper = lower.add_int(&BigInt::from(-1));
            if lower.sign() != Ordering::Less && upper.sign() == Ordering::Less {
                return cand;
            }
        }
        unreachable!("floor bracket missed; isqrt bound violated");
    }

    /// Reduction into [0, 1).
    pub fn reduce(&self) -> ExactNumber {
        let f = self.floor();
        ExactNumber(self.add_int(&-f))
    }
}

impl PartialEq for ExactValue {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_alpha(other);
        self.p == other.p && self.q == other.q
    }
}
impl Eq for ExactValue {}

impl PartialOrd for ExactValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).sign()
    }
}

fn fmt_point(p: &BigRational, q: &BigRational, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
    if q.is_zero() {
        write!(f, "{p}")
    } else if p.is_zero() {
        write!(f, "{q}*alpha")
    } else if q.is_negative() {
        write!(f, "{p} - {}*alpha", -q)
    } else {
        write!(f, "{p} + {q}*alpha")
    }
}

impl std::fmt::Display for ExactValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_point(&self.p, &self.q, f)
    }
}

/// A circle point: p + q*alpha reduced into [0, 1). Representation is
/// unique (alpha irrational), so structural equality is point equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExactNumber(ExactValue);

impl ExactNumber {
    pub fn from_parts(alpha: &AlphaRef, p: BigRational, q: BigRational) -> Self {
        ExactValue::new(alpha, p, q).reduce()
    }

    pub fn zero(alpha: &AlphaRef) -> Self {
        ExactNumber(ExactValue::zero(alpha))
    }

    /// The point alpha itself.
    pub fn alpha_point(alpha: &AlphaRef) -> Self {
        ExactValue::alpha_multiple(alpha, 1).reduce()
    }

    pub fn value(&self) -> &ExactValue {
        &self.0
    }

    pub fn p(&self) -> &BigRational {
        self.0.p()
    }
    pub fn q(&self) -> &BigRational {
        self.0.q()
    }
    pub fn alpha(&self) -> &AlphaRef {
        self.0.alpha()
    }

    /// x + steps*alpha mod 1, exact for any signed step count.
    pub fn rotate(&self, steps: i64) -> ExactNumber {
        self.0
            .add(&ExactValue::alpha_multiple(self.0.alpha(), steps))
            .reduce()
    }

    /// x + delta mod 1.
    pub fn translate(&self, delta: &ExactNumber) -> ExactNumber {
        self.0.add(&delta.0).reduce()
    }
}

impl std::fmt::Display for ExactNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt_point(self.p(), self.q(), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> AlphaRef {
        Shared::new(QuadraticIrrational::golden_conjugate())
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn construction_rejects_rational_angles() {
        assert_eq!(
            QuadraticIrrational::new(1, 0, 2, 5),
            Err(RotationError::RationalAngle)
        );
        assert_eq!(
            QuadraticIrrational::new(0, 1, 2, 1),
            Err(RotationError::RationalAngle)
        );
        assert_eq!(
            QuadraticIrrational::new(0, 1, 2, 12),
            Err(RotationError::NotSquareFree { d: 12 })
        );
        assert_eq!(
            QuadraticIrrational::new(0, 1, 0, 5),
            Err(RotationError::ZeroDenominator)
        );
    }

    #[test]
    fn normalization_fixes_signs_and_gcd() {
        let x = QuadraticIrrational::from_bigints(2.into(), (-2).into(), (-4).into(), 5).unwrap();
        assert_eq!(x.a(), &BigInt::from(-1));
        assert_eq!(x.b(), &BigInt::from(1));
        assert_eq!(x.c(), &BigInt::from(2));
    }

    #[test]
    fn golden_conjugate_is_between_zero_and_one() {
        let g = QuadraticIrrational::golden_conjugate();
        assert_eq!(g.cmp_rational(&BigRational::zero()), Ordering::Greater);
        assert_eq!(g.cmp_rational(&BigRational::one()), Ordering::Less);
        // Tighter: 3/5 < alpha < 5/8 (consecutive Fibonacci ratios).
        assert_eq!(g.cmp_rational(&rat(3, 5)), Ordering::Greater);
        assert_eq!(g.cmp_rational(&rat(5, 8)), Ordering::Less);
    }

    #[test]
    fn rotation_examples() {
        let a = golden();
        let x = ExactNumber::zero(&a);
        assert_eq!(x.rotate(0), x);
        assert_eq!(x.rotate(1).rotate(-1), x);
        // 2*alpha lies in (1, 2), so the reduced point is 2*alpha - 1.
        let two = x.rotate(2);
        assert_eq!(two.p(), &rat(-1, 1));
        assert_eq!(two.q(), &rat(2, 1));
    }

    #[test]
    fn rotation_composes_additively() {
        let a = golden();
        let x = ExactNumber::from_parts(&a, rat(1, 3), rat(0, 1));
        for m in -5i64..=5 {
            for n in -5i64..=5 {
                assert_eq!(x.rotate(m).rotate(n), x.rotate(m + n));
            }
        }
    }

    #[test]
    fn floors_match_known_golden_values() {
        // floor(k*alpha) for alpha = (sqrt(5)-1)/2 and k = 1..12.
        let expected = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7];
        let a = golden();
        for (k, &e) in (1i64..).zip(&expected) {
            let v = ExactValue::alpha_multiple(&a, k);
            assert_eq!(v.floor(), BigInt::from(e), "k = {k}");
        }
    }

    #[test]
    fn floor_of_negative_multiples() {
        let a = golden();
        // floor(-alpha) = -1, floor(-2*alpha) = -2 (2*alpha ~ 1.236).
        assert_eq!(ExactValue::alpha_multiple(&a, -1).floor(), BigInt::from(-1));
        assert_eq!(ExactValue::alpha_multiple(&a, -2).floor(), BigInt::from(-2));
    }

    #[test]
    fn reduced_values_stay_in_unit_interval() {
        let a = golden();
        for k in -50i64..=50 {
            let x = ExactNumber::from_parts(&a, rat(k, 7), rat(k, 1));
            assert_ne!(x.value().sign(), Ordering::Less);
            assert_eq!(
                x.value().sub(&ExactValue::one(&a)).sign(),
                Ordering::Less
            );
        }
    }

    #[test]
    fn ordering_is_exact_near_close_points() {
        let a = golden();
        // 13 is a Fibonacci number, so 13*alpha mod 1 (~0.034) crowds 0.
        let x = ExactNumber::from_parts(&a, rat(0, 1), rat(13, 1));
        let zero = ExactNumber::zero(&a);
        assert_eq!(x.cmp(&zero), Ordering::Greater);
        let y = ExactNumber::from_parts(&a, rat(0, 1), rat(21, 1));
        assert_ne!(x, y);
    }
}

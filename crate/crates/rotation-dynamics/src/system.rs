use crate::arc::{Arc, ArcSet};
use crate::error::RotationError;
use crate::quadratic::{AlphaRef, ExactNumber, ExactValue, QuadraticIrrational};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use word_core::{Alphabet, Word};

/// Circle rotation by alpha with a symbol-labeled partition into arc
/// unions. Coding reads the symbol of x0 + alpha, x0 + 2*alpha, ... so the
/// default x0 = alpha makes position j the classical iterate j + 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    alpha: AlphaRef,
    x0: ExactNumber,
    alphabet: Alphabet,
    char_sets: Vec<ArcSet>,
    /// The partition as one sorted chain of (lo, hi, symbol); the coding
    /// lookup structure, also the proof the sets tile the circle.
    chain: Vec<(ExactValue, ExactValue, u8)>,
}

impl RotationSystem {
    pub fn new(
        alpha: AlphaRef,
        x0: ExactNumber,
        alphabet: Alphabet,
        char_sets: Vec<ArcSet>,
    ) -> Result<Self, RotationError> {
        if char_sets.len() != alphabet.size() {
            return Err(RotationError::NotPartition {
                reason: format!(
                    "{} characteristic sets for {} symbols",
                    char_sets.len(),
                    alphabet.size()
                ),
            });
        }
        let mut chain: Vec<(ExactValue, ExactValue, u8)> = Vec::new();
        for (i, set) in char_sets.iter().enumerate() {
            if set.is_empty() {
                return Err(RotationError::EmptyCharSet { symbol: i as u8 });
            }
            for seg in set.segments() {
                chain.push((seg.lo.clone(), seg.hi.clone(), i as u8));
            }
        }
        chain.sort_by(|a, b| a.0.cmp(&b.0));
        let zero = ExactValue::zero(&alpha);
        let one = ExactValue::one(&alpha);
        if chain[0].0 != zero {
            return Err(RotationError::NotPartition {
                reason: format!("circle not covered below {}", chain[0].0),
            });
        }
        for w in chain.windows(2) {
            match w[1].0.cmp(&w[0].1) {
                Ordering::Equal => {}
                Ordering::Greater => {
                    return Err(RotationError::NotPartition {
                        reason: format!("gap between {} and {}", w[0].1, w[1].0),
                    })
                }
                Ordering::Less => {
                    return Err(RotationError::NotPartition {
                        reason: format!("overlap at {}", w[1].0),
                    })
                }
            }
        }
        if chain.last().expect("nonempty chain").1 != one {
            return Err(RotationError::NotPartition {
                reason: format!(
                    "circle not covered above {}",
                    chain.last().expect("nonempty chain").1
                ),
            });
        }
        Ok(RotationSystem {
            alpha,
            x0,
            alphabet,
            char_sets,
            chain,
        })
    }

    pub fn alpha(&self) -> &AlphaRef {
        &self.alpha
    }

    pub fn x0(&self) -> &ExactNumber {
        &self.x0
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn char_sets(&self) -> &[ArcSet] {
        &self.char_sets
    }

    pub fn char_set(&self, symbol: u8) -> Result<&ArcSet, RotationError> {
        self.char_sets
            .get(symbol as usize)
            .ok_or(RotationError::UnknownSymbol { symbol })
    }

    /// The symbol owning x; total because the chain tiles the circle.
    fn classify(&self, x: &ExactNumber) -> u8 {
        let xv = x.value();
        let idx = self
            .chain
            .partition_point(|(lo, _, _)| lo.cmp(xv) != Ordering::Greater);
        debug_assert!(idx > 0, "point below the partition chain");
        self.chain[idx - 1].2
    }

    /// All distinct circle points bounding any characteristic set.
    pub fn endpoints(&self) -> Vec<ExactNumber> {
        let mut pts = BTreeSet::new();
        for set in &self.char_sets {
            pts.extend(set.circle_endpoints());
        }
        pts.into_iter().collect()
    }
}

/// The binary system over [0, alpha) / [alpha, 1). x0 is given as a raw
/// (p, q) pair meaning p + q*alpha; None picks the classical x0 = alpha.
pub fn sturmian_system(
    angle: QuadraticIrrational,
    x0: Option<(BigRational, BigRational)>,
) -> Result<RotationSystem, RotationError> {
    let zero_r = BigRational::zero();
    let one_r = BigRational::from_integer(1.into());
    if angle.cmp_rational(&zero_r) != Ordering::Greater
        || angle.cmp_rational(&one_r) != Ordering::Less
    {
        return Err(RotationError::AngleOutOfRange);
    }
    let alpha = AlphaRef::new(angle);
    let zero = ExactNumber::zero(&alpha);
    let alpha_pt = ExactNumber::alpha_point(&alpha);
    let low = ArcSet::from_arcs(
        &alpha,
        &[Arc::new(zero.clone(), alpha_pt.clone())?],
    );
    let high = ArcSet::from_arcs(&alpha, &[Arc::new(alpha_pt.clone(), zero)?]);
    let x0 = match x0 {
        Some((p, q)) => ExactNumber::from_parts(&alpha, p, q),
        None => alpha_pt,
    };
    RotationSystem::new(alpha, x0, Alphabet::binary(), vec![low, high])
}

/// Codes n symbols: position j (0-based) reads the symbol at
/// x0 + (j+1)*alpha. Errors if any of those points is an arc endpoint.
pub fn code(system: &RotationSystem, n: usize) -> Result<Vec<u8>, RotationError> {
    // An endpoint e = (pe, qe) collides with x0 + k*alpha iff qe - q0 is an
    // integer k in [1, n] and pe - p0 is an integer; exact and O(endpoints).
    let mut first_hit: Option<usize> = None;
    for e in system.endpoints() {
        let dq = e.q() - system.x0.q();
        let dp = e.p() - system.x0.p();
        if !dq.is_integer() || !dp.is_integer() {
            continue;
        }
        let k = dq.to_integer();
        if k.is_positive() && k <= BigInt::from(n) {
            let k = usize::try_from(&k).expect("iterate fits usize");
            first_hit = Some(first_hit.map_or(k, |h| h.min(k)));
        }
    }
    if let Some(iterate) = first_hit {
        return Err(RotationError::EndpointCollision { iterate });
    }

    let mut out = Vec::with_capacity(n);
    let mut x = system.x0.clone();
    for _ in 0..n {
        x = x.rotate(1);
        out.push(system.classify(&x));
    }
    Ok(out)
}

/// The set of points whose next |w| coding symbols spell w: the
/// intersection of rotated preimages, built by backward refinement. Empty
/// means w never occurs in any coding of the system.
pub fn factor_interval(system: &RotationSystem, w: &Word) -> Result<ArcSet, RotationError> {
    let syms = w.syms();
    if syms.is_empty() {
        return Err(RotationError::EmptyWord);
    }
    for &s in syms {
        if s as usize >= system.alphabet.size() {
            return Err(RotationError::UnknownSymbol { symbol: s });
        }
    }
    let minus_alpha = ExactValue::alpha_multiple(&system.alpha, -1).reduce();
    let mut interval = system.char_sets[syms[syms.len() - 1] as usize].clone();
    for &s in syms[..syms.len() - 1].iter().rev() {
        interval = system.char_sets[s as usize].intersect(&interval.translate(&minus_alpha));
    }
    Ok(interval)
}

/// Every length-n word the system can code, with its factor interval, in
/// lexicographic order. The intervals tile the circle.
pub fn block_factors(
    system: &RotationSystem,
    n: usize,
) -> Result<Vec<(Word, ArcSet)>, RotationError> {
    if n == 0 {
        return Err(RotationError::EmptyWord);
    }
    let mut live: Vec<(Vec<u8>, ArcSet)> =
        vec![(Vec::new(), ArcSet::full_circle(&system.alpha))];
    for depth in 0..n {
        let shift = ExactValue::alpha_multiple(&system.alpha, -(depth as i64)).reduce();
        let shifted: Vec<ArcSet> = system
            .char_sets
            .iter()
            .map(|set| set.translate(&shift))
            .collect();
        let mut next = Vec::new();
        for (word, interval) in &live {
            for (s, shifted_set) in shifted.iter().enumerate() {
                let refined = interval.intersect(shifted_set);
                if !refined.is_empty() {
                    let mut w = word.clone();
                    w.push(s as u8);
                    next.push((w, refined));
                }
            }
        }
        live = next;
    }
    Ok(live.into_iter().map(|(w, i)| (Word(w), i)).collect())
}

/// Builds the n-block recoding of a binary base system: each new symbol's
/// characteristic set is the union of the factor intervals of the blocks
/// grouped under it. Grouping keys must be exactly the length-n factors and
/// every new symbol must receive at least one block.
pub fn sturmian_recode(
    base: &RotationSystem,
    n: usize,
    new_alphabet: &Alphabet,
    grouping: &BTreeMap<Word, u8>,
) -> Result<RotationSystem, RotationError> {
    if base.alphabet.size() != 2 {
        return Err(RotationError::NotSturmianBase);
    }
    if n == 0 {
        return Err(RotationError::EmptyWord);
    }
    let factors = block_factors(base, n)?;
    let factor_words: BTreeSet<&Word> = factors.iter().map(|(w, _)| w).collect();
    for key in grouping.keys() {
        if !factor_words.contains(key) {
            return Err(RotationError::GroupingExtraWord {
                word: key.render(&base.alphabet),
                n,
            });
        }
    }
    let mut sets: Vec<ArcSet> = vec![ArcSet::empty(&base.alpha); new_alphabet.size()];
    for (word, interval) in &factors {
        let &target = grouping
            .get(word)
            .ok_or_else(|| RotationError::GroupingMissingFactor {
                word: word.render(&base.alphabet),
                n,
            })?;
        if target as usize >= new_alphabet.size() {
            return Err(RotationError::UnknownSymbol { symbol: target });
        }
        sets[target as usize] = sets[target as usize].union(interval);
    }
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            let symbol = new_alphabet.symbols()[i];
            return Err(RotationError::GroupingNotSurjective { symbol });
        }
    }
    RotationSystem::new(
        base.alpha.clone(),
        base.x0.clone(),
        new_alphabet.clone(),
        sets,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeEntry {
    pub endpoint: ExactNumber,
    /// n with endpoint = n*alpha mod 1, when one exists with |n| <= bound.
    pub lattice: Option<BigInt>,
}

/// Identifies each arc endpoint as an integer rotate of 0 where possible.
/// An endpoint p + q*alpha is n*alpha mod 1 exactly when p and q are
/// integers (and then n = q, unique since alpha is irrational).
pub fn endpoint_lattice(system: &RotationSystem, bound: u64) -> Vec<LatticeEntry> {
    system
        .endpoints()
        .into_iter()
        .map(|endpoint| {
            let lattice = if endpoint.p().is_integer() && endpoint.q().is_integer() {
                let n = endpoint.q().to_integer();
                (n.abs() <= BigInt::from(bound)).then_some(n)
            } else {
                None
            };
            LatticeEntry { endpoint, lattice }
        })
        .collect()
}

use crate::alphabet::Alphabet;
use crate::error::SourceError;

/// Deterministic oracle for an infinite (or long finite) word.
///
/// `prefix(n)` is the presentation order: for one-sided sources the first n
/// symbols, for two-sided sources the interleaved fold w0, w-1, w1, w-2, ...
/// `window(h)` is what factor analysis consumes: a contiguous stretch of the
/// underlying word. The two coincide except for two-sided sources, where the
/// window is centered at the origin. Prefix consistency is part of the
/// contract: prefix(n) is a prefix of prefix(m) whenever n <= m.
pub trait PrefixSource {
    fn alphabet(&self) -> &Alphabet;

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError>;

    fn window(&self, horizon: usize) -> Result<Vec<u8>, SourceError> {
        self.prefix(horizon)
    }

    fn is_two_sided(&self) -> bool {
        false
    }
}

/// A concrete finite word. Asking beyond its length is an error rather than
/// silent truncation.
#[derive(Debug, Clone)]
pub struct ExplicitSource {
    alphabet: Alphabet,
    syms: Vec<u8>,
}

impl ExplicitSource {
    pub fn new(alphabet: Alphabet, syms: Vec<u8>) -> Result<Self, SourceError> {
        check_range(&alphabet, &syms)?;
        Ok(ExplicitSource { alphabet, syms })
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self, SourceError> {
        let syms = alphabet.parse(text)?;
        Ok(ExplicitSource {
            alphabet: alphabet.clone(),
            syms,
        })
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }
}

impl PrefixSource for ExplicitSource {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError> {
        if n > self.syms.len() {
            return Err(SourceError::ExplicitTooShort {
                len: self.syms.len(),
                requested: n,
            });
        }
        Ok(self.syms[..n].to_vec())
    }
}

/// cycle^∞.
#[derive(Debug, Clone)]
pub struct PeriodicSource {
    alphabet: Alphabet,
    cycle: Vec<u8>,
}

impl PeriodicSource {
    pub fn new(alphabet: Alphabet, cycle: Vec<u8>) -> Result<Self, SourceError> {
        if cycle.is_empty() {
            return Err(SourceError::EmptyCycle);
        }
        check_range(&alphabet, &cycle)?;
        Ok(PeriodicSource { alphabet, cycle })
    }

    pub fn parse(alphabet: &Alphabet, cycle: &str) -> Result<Self, SourceError> {
        Self::new(alphabet.clone(), alphabet.parse(cycle)?)
    }
}

impl PrefixSource for PeriodicSource {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError> {
        Ok((0..n).map(|i| self.cycle[i % self.cycle.len()]).collect())
    }
}

/// head · cycle^∞.
#[derive(Debug, Clone)]
pub struct EventuallyPeriodicSource {
    alphabet: Alphabet,
    head: Vec<u8>,
    cycle: Vec<u8>,
}

impl EventuallyPeriodicSource {
    pub fn new(alphabet: Alphabet, head: Vec<u8>, cycle: Vec<u8>) -> Result<Self, SourceError> {
        if cycle.is_empty() {
            return Err(SourceError::EmptyCycle);
        }
        check_range(&alphabet, &head)?;
        check_range(&alphabet, &cycle)?;
        Ok(EventuallyPeriodicSource {
            alphabet,
            head,
            cycle,
        })
    }

    pub fn parse(alphabet: &Alphabet, head: &str, cycle: &str) -> Result<Self, SourceError> {
        Self::new(
            alphabet.clone(),
            alphabet.parse(head)?,
            alphabet.parse(cycle)?,
        )
    }
}

impl PrefixSource for EventuallyPeriodicSource {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i < self.head.len() {
                out.push(self.head[i]);
            } else {
                out.push(self.cycle[(i - self.head.len()) % self.cycle.len()]);
            }
        }
        Ok(out)
    }
}

/// Fixed point of a non-erasing substitution, prolongable from its seed:
/// the image of the seed must start with the seed and be strictly longer.
#[derive(Debug, Clone)]
pub struct SubstitutionSource {
    alphabet: Alphabet,
    rules: Vec<Vec<u8>>,
    seed: u8,
}

impl SubstitutionSource {
    pub fn new(alphabet: Alphabet, rules: Vec<Vec<u8>>, seed: u8) -> Result<Self, SourceError> {
        if rules.len() != alphabet.size() {
            return Err(SourceError::IndexOutOfRange {
                index: rules.len() as u8,
                size: alphabet.size(),
            });
        }
        for (i, image) in rules.iter().enumerate() {
            if image.is_empty() {
                return Err(SourceError::ErasingRule { symbol: i as u8 });
            }
            check_range(&alphabet, image)?;
        }
        let seed_image = &rules[seed as usize];
        if seed_image.len() < 2 || seed_image[0] != seed {
            return Err(SourceError::NotProlongable);
        }
        Ok(SubstitutionSource {
            alphabet,
            rules,
            seed,
        })
    }

    pub fn parse(
        alphabet: &Alphabet,
        rules: &[(&str, &str)],
        seed: char,
    ) -> Result<Self, SourceError> {
        let mut table = vec![Vec::new(); alphabet.size()];
        for (sym, image) in rules {
            let mut it = sym.chars();
            let c = it.next().ok_or(SourceError::EmptyAlphabet)?;
            let idx = alphabet
                .index_of(c)
                .ok_or(SourceError::UnknownSymbol { symbol: c })?;
            table[idx as usize] = alphabet.parse(image)?;
        }
        let seed = alphabet
            .index_of(seed)
            .ok_or(SourceError::UnknownSymbol { symbol: seed })?;
        Self::new(alphabet.clone(), table, seed)
    }

    fn apply(&self, word: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(word.len() * 2);
        for &s in word {
            out.extend_from_slice(&self.rules[s as usize]);
        }
        out
    }
}

impl PrefixSource for SubstitutionSource {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError> {
        let mut cur = vec![self.seed];
        while cur.len() < n {
            let next = self.apply(&cur);
            if next.len() == cur.len() {
                // Non-erasing and prolongable rules out shrinking; equal
                // length means a fixpoint that will never reach n.
                return Err(SourceError::SubstitutionStalled { reached: cur.len() });
            }
            cur = next;
        }
        cur.truncate(n);
        Ok(cur)
    }
}

/// Two-sided word ... w-2 w-1 w0 w1 w2 ... given by a forward source
/// (w0, w1, ...) and a backward source (w-1, w-2, ...).
///
/// `prefix` presents the interleaved fold w0, w-1, w1, w-2, ...; `window`
/// returns the contiguous stretch w_{-h/2} .. w_{h/2} used for factor
/// analysis, so factors of the window are genuine two-sided factors.
pub struct TwoSidedSource {
    forward: Box<dyn PrefixSource>,
    backward: Box<dyn PrefixSource>,
}

impl TwoSidedSource {
    pub fn new(
        forward: Box<dyn PrefixSource>,
        backward: Box<dyn PrefixSource>,
    ) -> Result<Self, SourceError> {
        if forward.alphabet() != backward.alphabet() {
            return Err(SourceError::AlphabetMismatch);
        }
        Ok(TwoSidedSource { forward, backward })
    }
}

impl PrefixSource for TwoSidedSource {
    fn alphabet(&self) -> &Alphabet {
        self.forward.alphabet()
    }

    fn prefix(&self, n: usize) -> Result<Vec<u8>, SourceError> {
        let fwd = self.forward.prefix(n.div_ceil(2))?;
        let bwd = self.backward.prefix(n / 2)?;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i % 2 == 0 {
                out.push(fwd[i / 2]);
            } else {
                out.push(bwd[i / 2]);
            }
        }
        Ok(out)
    }

    fn window(&self, horizon: usize) -> Result<Vec<u8>, SourceError> {
        let back = horizon / 2;
        let fwd = horizon - back;
        let mut out = self.backward.prefix(back)?;
        out.reverse();
        out.extend(self.forward.prefix(fwd)?);
        Ok(out)
    }

    fn is_two_sided(&self) -> bool {
        true
    }
}

fn check_range(alphabet: &Alphabet, syms: &[u8]) -> Result<(), SourceError> {
    let size = alphabet.size();
    for &s in syms {
        if s as usize >= size {
            return Err(SourceError::IndexOutOfRange { index: s, size });
        }
    }
    Ok(())
}

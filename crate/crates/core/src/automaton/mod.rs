//! Finite automata reading tuples of natural numbers in parallel, one base-`n`
//! digit per track per step, least significant digit first.
//!
//! Transition tables are dense: a symbol (an `r`-tuple of digits) is stored as
//! its index in the lexicographic order of all `radix^r` tuples, so track 0 is
//! the most significant position of the index. Missing entries reject.

mod io;
mod minimize;
mod nfa;
mod ops;

use std::fmt;

use crate::error::{Error, Result};
use crate::numeral::{to_digits, Base, Natural};

pub use nfa::Nfa;
pub use ops::{Equivalence, ProductMode};

pub type StateId = u32;

/// Alphabets beyond this many symbols are refused.
pub const MAX_ALPHABET: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Alphabet {
    radix: u32,
    tracks: usize,
    size: usize,
}

impl Alphabet {
    pub(crate) fn new(base: Base, tracks: usize) -> Result<Self> {
        let radix = base.radix();
        let mut size = 1usize;
        for _ in 0..tracks {
            size = size
                .checked_mul(radix as usize)
                .filter(|&s| s <= MAX_ALPHABET)
                .ok_or(Error::AlphabetTooLarge { radix, tracks })?;
        }
        Ok(Alphabet { radix, tracks, size })
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    pub(crate) fn index(&self, digits: &[u32]) -> usize {
        debug_assert_eq!(digits.len(), self.tracks);
        digits.iter().fold(0, |acc, &d| acc * self.radix as usize + d as usize)
    }

    pub(crate) fn digits(&self, mut index: usize) -> Vec<u32> {
        let mut out = vec![0; self.tracks];
        for slot in out.iter_mut().rev() {
            *slot = (index % self.radix as usize) as u32;
            index /= self.radix as usize;
        }
        out
    }

    pub(crate) fn check(&self, digits: &[u32]) -> Result<()> {
        if digits.len() != self.tracks {
            return Err(Error::ArityMismatch { expected: self.tracks, found: digits.len() });
        }
        match digits.iter().find(|&&d| d >= self.radix) {
            Some(&digit) => Err(Error::InvalidDigit { digit, radix: self.radix }),
            None => Ok(()),
        }
    }
}

/// A finite word over the `r`-track digit alphabet of some base.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitWord {
    base: Base,
    tracks: usize,
    symbols: Vec<Vec<u32>>,
}

impl DigitWord {
    pub fn new(base: Base, tracks: usize, symbols: Vec<Vec<u32>>) -> Result<Self> {
        let alphabet = Alphabet::new(base, tracks)?;
        for s in &symbols {
            alphabet.check(s)?;
        }
        Ok(DigitWord { base, tracks, symbols })
    }

    /// Encodes each component LSD-first and pads all of them with zeros to
    /// the longest component.
    pub fn from_tuple(base: Base, xs: &[Natural]) -> Self {
        let seqs: Vec<_> = xs.iter().map(|x| to_digits(x, base).into_digits()).collect();
        let len = seqs.iter().map(Vec::len).max().unwrap_or(0);
        let symbols = (0..len)
            .map(|p| seqs.iter().map(|s| s.get(p).copied().unwrap_or(0)).collect())
            .collect();
        DigitWord { base, tracks: xs.len(), symbols }
    }

    pub fn from_values(base: Base, xs: &[u64]) -> Self {
        let xs: Vec<Natural> = xs.iter().map(|&x| Natural::from(x)).collect();
        Self::from_tuple(base, &xs)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn tracks(&self) -> usize {
        self.tracks
    }

    pub fn symbols(&self) -> &[Vec<u32>] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Appends `count` all-zero symbols.
    pub fn padded(&self, count: usize) -> Self {
        let mut out = self.clone();
        out.symbols.extend(std::iter::repeat_n(vec![0; self.tracks], count));
        out
    }

    /// Reads each track back as a natural.
    pub fn to_tuple(&self) -> Vec<Natural> {
        (0..self.tracks)
            .map(|t| {
                self.symbols
                    .iter()
                    .rev()
                    .fold(Natural::from(0u32), |acc, s| acc * self.base.radix() + s[t])
            })
            .collect()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write_symbol(f, s)?;
        }
        write!(f, "]")
    }
}

pub(crate) fn write_symbol(f: &mut impl fmt::Write, digits: &[u32]) -> fmt::Result {
    if digits.len() == 1 {
        return write!(f, "{}", digits[0]);
    }
    write!(f, "(")?;
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{d}")?;
    }
    write!(f, ")")
}

/// Deterministic automaton with a partial transition function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    base: Base,
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Option<StateId>>,
}

impl Dfa {
    /// An automaton with `states` states, initial state 0, no finals and no
    /// transitions.
    pub fn new(base: Base, tracks: usize, states: usize) -> Result<Self> {
        let alphabet = Alphabet::new(base, tracks)?;
        if states == 0 {
            return Err(Error::Malformed("an automaton needs at least one state".into()));
        }
        Ok(Dfa {
            base,
            alphabet,
            initial: 0,
            finals: vec![false; states],
            delta: vec![None; states * alphabet.size()],
        })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn tracks(&self) -> usize {
        self.alphabet.tracks
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q as usize]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states() as StateId).filter(|&q| self.is_final(q))
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.size()
    }

    pub(crate) fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn symbol_digits(&self, index: usize) -> Vec<u32> {
        self.alphabet.digits(index)
    }

    pub fn symbol_index(&self, digits: &[u32]) -> Result<usize> {
        self.alphabet.check(digits)?;
        Ok(self.alphabet.index(digits))
    }

    pub fn add_state(&mut self) -> StateId {
        let id = self.num_states() as StateId;
        self.finals.push(false);
        self.delta.extend(std::iter::repeat_n(None, self.alphabet.size()));
        id
    }

    pub fn set_initial(&mut self, q: StateId) -> Result<()> {
        self.check_state(q)?;
        self.initial = q;
        Ok(())
    }

    pub fn set_final(&mut self, q: StateId, accepting: bool) -> Result<()> {
        self.check_state(q)?;
        self.finals[q as usize] = accepting;
        Ok(())
    }

    pub fn set_transition(&mut self, from: StateId, digits: &[u32], to: StateId) -> Result<()> {
        let sym = self.symbol_index(digits)?;
        self.check_state(from)?;
        self.check_state(to)?;
        self.delta[from as usize * self.alphabet.size() + sym] = Some(to);
        Ok(())
    }

    pub(crate) fn set_edge(&mut self, from: StateId, sym: usize, to: Option<StateId>) {
        self.delta[from as usize * self.alphabet.size() + sym] = to;
    }

    fn check_state(&self, q: StateId) -> Result<()> {
        if (q as usize) < self.num_states() {
            Ok(())
        } else {
            Err(Error::Malformed(format!("state {q} out of range")))
        }
    }

    #[inline]
    pub fn step(&self, q: StateId, sym: usize) -> Option<StateId> {
        self.delta[q as usize * self.alphabet.size() + sym]
    }

    pub fn transition(&self, q: StateId, digits: &[u32]) -> Result<Option<StateId>> {
        let sym = self.symbol_index(digits)?;
        self.check_state(q)?;
        Ok(self.step(q, sym))
    }

    /// State reached from `from` on the given symbol indices, if the run survives.
    pub(crate) fn walk(&self, from: StateId, syms: impl IntoIterator<Item = usize>) -> Option<StateId> {
        syms.into_iter().try_fold(from, |q, s| self.step(q, s))
    }

    pub fn run(&self, w: &DigitWord) -> Result<bool> {
        if w.base != self.base {
            return Err(Error::BaseMismatch { expected: self.base.radix(), found: w.base.radix() });
        }
        if w.tracks != self.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: w.tracks });
        }
        let end = self.walk(self.initial, w.symbols.iter().map(|s| self.alphabet.index(s)));
        Ok(end.is_some_and(|q| self.is_final(q)))
    }

    /// Runs on the LSD-first encodings of `xs`, zero-padded to a common length.
    pub fn accepts_tuple(&self, xs: &[Natural]) -> Result<bool> {
        if xs.len() != self.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: xs.len() });
        }
        self.run(&DigitWord::from_tuple(self.base, xs))
    }

    pub fn accepts_values(&self, xs: &[u64]) -> Result<bool> {
        if xs.len() != self.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: xs.len() });
        }
        self.run(&DigitWord::from_values(self.base, xs))
    }

    /// Runs on per-track digit slices (LSD first), zero-padded to the longest.
    pub fn accepts_digits(&self, tracks: &[&[u32]]) -> bool {
        debug_assert_eq!(tracks.len(), self.tracks());
        let len = tracks.iter().map(|t| t.len()).max().unwrap_or(0);
        let radix = self.base.radix() as usize;
        let mut q = self.initial;
        for p in 0..len {
            let sym = tracks
                .iter()
                .fold(0, |acc, t| acc * radix + t.get(p).copied().unwrap_or(0) as usize);
            match self.step(q, sym) {
                Some(next) => q = next,
                None => return false,
            }
        }
        self.is_final(q)
    }

    /// Structural check: endpoints valid, table shape consistent.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_states();
        if self.delta.len() != n * self.alphabet.size() {
            return Err(Error::Malformed("transition table has the wrong size".into()));
        }
        if self.initial as usize >= n {
            return Err(Error::Malformed(format!("initial state {} out of range", self.initial)));
        }
        if let Some(bad) = self.delta.iter().flatten().find(|&&t| t as usize >= n) {
            return Err(Error::Malformed(format!("transition target {bad} out of range")));
        }
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// Adds a non-final sink for every missing transition. Complete automata
    /// are returned unchanged.
    pub fn complete(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let mut out = self.clone();
        let sink = out.add_state();
        for slot in out.delta.iter_mut() {
            slot.get_or_insert(sink);
        }
        out
    }

    /// States from which some final state is reachable.
    pub fn live_states(&self) -> Vec<bool> {
        let n = self.num_states();
        let a = self.alphabet.size();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for s in 0..a {
                if let Some(t) = self.delta[q * a + s] {
                    preds[t as usize].push(q as StateId);
                }
            }
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q as usize] {
                if !live[p as usize] {
                    live[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Renumbers reachable states breadth-first from the initial state, edges
    /// visited in lexicographic symbol order. Unreachable states are dropped.
    pub fn canonical(&self) -> Dfa {
        let a = self.alphabet.size();
        let mut order: Vec<StateId> = vec![self.initial];
        let mut id = vec![StateId::MAX; self.num_states()];
        id[self.initial as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for s in 0..a {
                if let Some(t) = self.step(q, s) {
                    if id[t as usize] == StateId::MAX {
                        id[t as usize] = order.len() as StateId;
                        order.push(t);
                    }
                }
            }
        }
        let mut out = Dfa {
            base: self.base,
            alphabet: self.alphabet,
            initial: 0,
            finals: order.iter().map(|&q| self.is_final(q)).collect(),
            delta: vec![None; order.len() * a],
        };
        for (new, &old) in order.iter().enumerate() {
            for s in 0..a {
                out.delta[new * a + s] = self.step(old, s).map(|t| id[t as usize]);
            }
        }
        out
    }

    /// The automaton accepting every word over `tracks` tracks.
    pub fn universal(base: Base, tracks: usize) -> Result<Dfa> {
        let mut d = Dfa::new(base, tracks, 1)?;
        d.finals[0] = true;
        d.delta.iter_mut().for_each(|slot| *slot = Some(0));
        Ok(d)
    }

    /// The automaton accepting nothing.
    pub fn empty(base: Base, tracks: usize) -> Result<Dfa> {
        Dfa::new(base, tracks, 1)
    }
}

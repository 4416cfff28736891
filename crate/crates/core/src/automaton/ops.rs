use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{Alphabet, Dfa, DigitWord, Nfa, StateId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    And,
    Or,
}

/// Outcome of a language comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    /// A shortest word accepted by exactly one side.
    Differ(DigitWord),
}

impl Equivalence {
    pub fn is_equal(&self) -> bool {
        matches!(self, Equivalence::Equal)
    }
}

impl Dfa {
    fn check_compatible(&self, other: &Dfa) -> Result<()> {
        if self.base() != other.base() {
            return Err(Error::BaseMismatch {
                expected: self.base().radix(),
                found: other.base().radix(),
            });
        }
        if self.tracks() != other.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: other.tracks() });
        }
        Ok(())
    }

    /// Synchronous product over reachable state pairs.
    pub fn product(&self, other: &Dfa, mode: ProductMode) -> Result<Dfa> {
        self.check_compatible(other)?;
        let (left, right) = match mode {
            ProductMode::And => (self.clone(), other.clone()),
            ProductMode::Or => (self.complete(), other.complete()),
        };
        let a = self.alphabet_size();
        let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs = vec![(left.initial(), right.initial())];
        ids.insert(pairs[0], 0);
        let mut edges: Vec<Vec<Option<StateId>>> = Vec::new();
        let mut head = 0;
        while head < pairs.len() {
            let (p, q) = pairs[head];
            let mut row = vec![None; a];
            for (s, slot) in row.iter_mut().enumerate() {
                if let (Some(p2), Some(q2)) = (left.step(p, s), right.step(q, s)) {
                    let next = *ids.entry((p2, q2)).or_insert_with(|| {
                        pairs.push((p2, q2));
                        (pairs.len() - 1) as StateId
                    });
                    *slot = Some(next);
                }
            }
            edges.push(row);
            head += 1;
        }
        let mut out = Dfa::new(self.base(), self.tracks(), pairs.len())?;
        for (i, &(p, q)) in pairs.iter().enumerate() {
            let accepting = match mode {
                ProductMode::And => left.is_final(p) && right.is_final(q),
                ProductMode::Or => left.is_final(p) || right.is_final(q),
            };
            out.set_final(i as StateId, accepting)?;
            for (s, &t) in edges[i].iter().enumerate() {
                out.set_edge(i as StateId, s, t);
            }
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, ProductMode::And)
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa> {
        self.product(other, ProductMode::Or)
    }

    pub fn complement(&self) -> Dfa {
        let mut out = self.complete();
        for q in 0..out.num_states() as StateId {
            let f = out.is_final(q);
            out.set_final(q, !f).expect("state in range");
        }
        out
    }

    /// Re-reads the automaton over `tracks` new tracks: old track `i` takes its
    /// digit from new track `source_of[i]`. Covers reordering, duplication
    /// (diagonals) and adding unconstrained tracks.
    pub fn remap_tracks(&self, tracks: usize, source_of: &[usize]) -> Result<Dfa> {
        if source_of.len() != self.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: source_of.len() });
        }
        if let Some(&index) = source_of.iter().find(|&&t| t >= tracks) {
            return Err(Error::TrackOutOfRange { index, tracks });
        }
        let new_alpha = Alphabet::new(self.base(), tracks)?;
        let old_alpha = self.alphabet();
        let translate: Vec<usize> = (0..new_alpha.size())
            .map(|s| {
                let digits = new_alpha.digits(s);
                let old: Vec<u32> = source_of.iter().map(|&t| digits[t]).collect();
                old_alpha.index(&old)
            })
            .collect();
        let mut out = Dfa::new(self.base(), tracks, self.num_states())?;
        out.set_initial(self.initial())?;
        for q in 0..self.num_states() as StateId {
            out.set_final(q, self.is_final(q))?;
            for (s, &old) in translate.iter().enumerate() {
                out.set_edge(q, s, self.step(q, old));
            }
        }
        Ok(out)
    }

    /// Inserts an unconstrained track at position `at`.
    pub fn cylindrify(&self, at: usize) -> Result<Dfa> {
        if at > self.tracks() {
            return Err(Error::TrackOutOfRange { index: at, tracks: self.tracks() + 1 });
        }
        let source_of: Vec<usize> = (0..self.tracks()).map(|i| if i < at { i } else { i + 1 }).collect();
        self.remap_tracks(self.tracks() + 1, &source_of)
    }

    /// Existentially quantifies track `at`: erase it, close under trailing
    /// zero padding (witnesses may be longer than the other components),
    /// determinize and minimize.
    pub fn project(&self, at: usize) -> Result<Dfa> {
        if at >= self.tracks() {
            return Err(Error::TrackOutOfRange { index: at, tracks: self.tracks() });
        }
        let r = self.tracks();
        let radix = self.base().radix();
        let old_alpha = self.alphabet();
        let new_alpha = Alphabet::new(self.base(), r - 1)?;
        let mut nfa = Nfa::new(self.base(), r - 1, self.num_states())?;
        nfa.add_initial(self.initial())?;
        for q in 0..self.num_states() as StateId {
            nfa.set_final(q, self.is_final(q))?;
        }
        for s in 0..new_alpha.size() {
            let mut digits = new_alpha.digits(s);
            digits.insert(at, 0);
            for d in 0..radix {
                digits[at] = d;
                let old = old_alpha.index(&digits);
                for q in 0..self.num_states() as StateId {
                    if let Some(t) = self.step(q, old) {
                        nfa.add_edge(q, s, t);
                    }
                }
            }
        }
        Ok(nfa.padding_closure().determinize().minimize())
    }

    /// The padding-invariant automaton for the tuples some padded encoding
    /// of which is accepted: it accepts `w` iff `u·0^j` is accepted for some
    /// `j`, where `u` is `w` without its trailing zero symbols. Turns an
    /// automaton that only reads block-aligned words into one for the same
    /// relation, and leaves padding-invariant languages unchanged.
    pub fn close_padding(&self) -> Dfa {
        let n = self.num_states();
        // good[q]: zero symbols lead from q to a final state
        let mut good: Vec<bool> = (0..n as StateId).map(|q| self.is_final(q)).collect();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n as StateId {
            if let Some(t) = self.step(q, 0) {
                preds[t as usize].push(q);
            }
        }
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q as usize] {
                if !good[p as usize] {
                    good[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        let is_good = |q: Option<StateId>| q.is_some_and(|q| good[q as usize]);

        // state: where the original run is, and whether the word read so far
        // minus its trailing zeros has an accepted padding
        type Key = (Option<StateId>, bool);
        let start: Key = (Some(self.initial()), is_good(Some(self.initial())));
        let mut ids: HashMap<Key, StateId> = HashMap::from([(start, 0)]);
        let mut keys = vec![start];
        let mut edges: Vec<Vec<Option<StateId>>> = Vec::new();
        let mut head = 0;
        while head < keys.len() {
            let (q, flag) = keys[head];
            let row = (0..self.alphabet_size())
                .map(|s| {
                    let t = q.and_then(|q| self.step(q, s));
                    let next = if s == 0 { flag || is_good(t) } else { is_good(t) };
                    if t.is_none() && !next {
                        return None;
                    }
                    let key = (t, next);
                    Some(*ids.entry(key).or_insert_with(|| {
                        keys.push(key);
                        (keys.len() - 1) as StateId
                    }))
                })
                .collect();
            edges.push(row);
            head += 1;
        }
        let mut out = Dfa::new(self.base(), self.tracks(), keys.len()).expect("same alphabet");
        for (q, &(_, flag)) in keys.iter().enumerate() {
            out.set_final(q as StateId, flag).expect("state in range");
            for (s, &t) in edges[q].iter().enumerate() {
                out.set_edge(q as StateId, s, t);
            }
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    /// A shortest accepted word, lexicographically least among the shortest.
    pub fn shortest_accepted(&self) -> Option<DigitWord> {
        let n = self.num_states();
        let mut parent: Vec<Option<(StateId, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.initial()]);
        seen[self.initial() as usize] = true;
        while let Some(q) = queue.pop_front() {
            if self.is_final(q) {
                let mut syms = Vec::new();
                let mut cur = q;
                while let Some((p, s)) = parent[cur as usize] {
                    syms.push(self.symbol_digits(s));
                    cur = p;
                }
                syms.reverse();
                return Some(DigitWord { base: self.base(), tracks: self.tracks(), symbols: syms });
            }
            for s in 0..self.alphabet_size() {
                if let Some(t) = self.step(q, s) {
                    if !seen[t as usize] {
                        seen[t as usize] = true;
                        parent[t as usize] = Some((q, s));
                        queue.push_back(t);
                    }
                }
            }
        }
        None
    }

    /// Language equality, with a shortest distinguishing word otherwise.
    pub fn equivalent(&self, other: &Dfa) -> Result<Equivalence> {
        self.check_compatible(other)?;
        let (left, right) = (self.complete(), other.complete());
        type Pair = (StateId, StateId);
        let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
        let start = (left.initial(), right.initial());
        parent.insert(start, None);
        let mut queue = VecDeque::from([start]);
        while let Some((p, q)) = queue.pop_front() {
            if left.is_final(p) != right.is_final(q) {
                let mut syms = Vec::new();
                let mut cur = (p, q);
                while let Some(Some((prev, s))) = parent.get(&cur) {
                    syms.push(self.symbol_digits(*s));
                    cur = *prev;
                }
                syms.reverse();
                return Ok(Equivalence::Differ(DigitWord {
                    base: self.base(),
                    tracks: self.tracks(),
                    symbols: syms,
                }));
            }
            for s in 0..self.alphabet_size() {
                let next = (left.step(p, s).expect("complete"), right.step(q, s).expect("complete"));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                    e.insert(Some(((p, q), s)));
                    queue.push_back(next);
                }
            }
        }
        Ok(Equivalence::Equal)
    }

    /// All tuples with every component below `bound` that are accepted. Runs
    /// on words of the fixed length needed for `bound - 1`, so it relies on
    /// the automaton being invariant under trailing zero padding.
    pub fn enumerate_accepted(&self, bound: u64) -> BTreeSet<Vec<u64>> {
        let mut out = BTreeSet::new();
        if bound == 0 {
            return out;
        }
        let radix = self.base().radix() as u128;
        let mut len = 0;
        let mut reach: u128 = 1;
        while reach < bound as u128 {
            reach *= radix;
            len += 1;
        }
        let live = self.live_states();
        let r = self.tracks();
        let mut values = vec![0u128; r];
        self.enumerate_rec(self.initial(), 0, len, 1, bound as u128, &live, &mut values, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn enumerate_rec(
        &self,
        q: StateId,
        pos: usize,
        len: usize,
        weight: u128,
        bound: u128,
        live: &[bool],
        values: &mut Vec<u128>,
        out: &mut BTreeSet<Vec<u64>>,
    ) {
        if pos == len {
            if self.is_final(q) && values.iter().all(|&v| v < bound) {
                out.insert(values.iter().map(|&v| v as u64).collect());
            }
            return;
        }
        for s in 0..self.alphabet_size() {
            let Some(t) = self.step(q, s) else { continue };
            if !live[t as usize] {
                continue;
            }
            let digits = self.symbol_digits(s);
            if digits.iter().zip(values.iter()).any(|(&d, &v)| v + d as u128 * weight >= bound) {
                continue;
            }
            for (v, &d) in values.iter_mut().zip(&digits) {
                *v += d as u128 * weight;
            }
            self.enumerate_rec(t, pos + 1, len, weight * self.base().radix() as u128, bound, live, values, out);
            for (v, &d) in values.iter_mut().zip(&digits) {
                *v -= d as u128 * weight;
            }
        }
    }

    /// With every track but the last fixed to the given LSD-first digits,
    /// returns the canonical digit strings of all last-track values of at most
    /// `max_len` digits that complete an accepted tuple. `live` must come from
    /// [`Dfa::live_states`]. Assumes padding invariance like
    /// [`Dfa::enumerate_accepted`].
    pub fn completions(&self, fixed: &[&[u32]], max_len: usize, live: &[bool]) -> Vec<Vec<u32>> {
        debug_assert_eq!(fixed.len() + 1, self.tracks());
        let len = fixed.iter().map(|f| f.len()).max().unwrap_or(0).max(max_len);
        let radix = self.base().radix() as usize;
        let prefix: Vec<usize> = (0..len)
            .map(|p| {
                fixed.iter().fold(0, |acc, f| acc * radix + f.get(p).copied().unwrap_or(0) as usize)
                    * radix
            })
            .collect();
        let mut out = Vec::new();
        let mut digits = Vec::with_capacity(len);
        self.completions_rec(self.initial(), &prefix, live, &mut digits, &mut out);
        out
    }

    fn completions_rec(
        &self,
        q: StateId,
        prefix: &[usize],
        live: &[bool],
        digits: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let pos = digits.len();
        if pos == prefix.len() {
            if self.is_final(q) {
                let mut w = digits.clone();
                while w.last() == Some(&0) {
                    w.pop();
                }
                out.push(w);
            }
            return;
        }
        for d in 0..self.base().radix() {
            let Some(t) = self.step(q, prefix[pos] + d as usize) else { continue };
            if live[t as usize] {
                digits.push(d);
                self.completions_rec(t, prefix, live, digits, out);
                digits.pop();
            }
        }
    }
}

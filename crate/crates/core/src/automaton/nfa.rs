use std::collections::HashMap;

use super::{Alphabet, Dfa, DigitWord, StateId};
use crate::error::{Error, Result};
use crate::numeral::Base;

/// Nondeterministic automaton over the same alphabets as [`Dfa`]; used as the
/// intermediate step of projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    base: Base,
    alphabet: Alphabet,
    initials: Vec<StateId>,
    finals: Vec<bool>,
    /// `delta[q * |Σ| + s]` is the sorted successor set.
    delta: Vec<Vec<StateId>>,
}

impl Nfa {
    pub fn new(base: Base, tracks: usize, states: usize) -> Result<Self> {
        let alphabet = Alphabet::new(base, tracks)?;
        Ok(Nfa {
            base,
            alphabet,
            initials: Vec::new(),
            finals: vec![false; states],
            delta: vec![Vec::new(); states * alphabet.size()],
        })
    }

    pub fn from_dfa(d: &Dfa) -> Nfa {
        let a = d.alphabet_size();
        let mut out = Nfa {
            base: d.base(),
            alphabet: d.alphabet(),
            initials: vec![d.initial()],
            finals: (0..d.num_states() as StateId).map(|q| d.is_final(q)).collect(),
            delta: vec![Vec::new(); d.num_states() * a],
        };
        for q in 0..d.num_states() {
            for s in 0..a {
                if let Some(t) = d.step(q as StateId, s) {
                    out.delta[q * a + s].push(t);
                }
            }
        }
        out
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

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q as usize]
    }

    pub fn initials(&self) -> &[StateId] {
        &self.initials
    }

    fn check_state(&self, q: StateId) -> Result<()> {
        if (q as usize) < self.num_states() {
            Ok(())
        } else {
            Err(Error::Malformed(format!("state {q} out of range")))
        }
    }

    pub fn add_initial(&mut self, q: StateId) -> Result<()> {
        self.check_state(q)?;
        if let Err(pos) = self.initials.binary_search(&q) {
            self.initials.insert(pos, q);
        }
        Ok(())
    }

    pub fn set_final(&mut self, q: StateId, accepting: bool) -> Result<()> {
        self.check_state(q)?;
        self.finals[q as usize] = accepting;
        Ok(())
    }

    pub fn add_transition(&mut self, from: StateId, digits: &[u32], to: StateId) -> Result<()> {
        self.alphabet.check(digits)?;
        self.check_state(from)?;
        self.check_state(to)?;
        let sym = self.alphabet.index(digits);
        self.add_edge(from, sym, to);
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, from: StateId, sym: usize, to: StateId) {
        let set = &mut self.delta[from as usize * self.alphabet.size() + sym];
        if let Err(pos) = set.binary_search(&to) {
            set.insert(pos, to);
        }
    }

    pub(crate) fn successors(&self, q: StateId, sym: usize) -> &[StateId] {
        &self.delta[q as usize * self.alphabet.size() + sym]
    }

    pub fn run(&self, w: &DigitWord) -> Result<bool> {
        if w.base() != self.base {
            return Err(Error::BaseMismatch { expected: self.base.radix(), found: w.base().radix() });
        }
        if w.tracks() != self.tracks() {
            return Err(Error::ArityMismatch { expected: self.tracks(), found: w.tracks() });
        }
        let mut current = self.initials.clone();
        for s in w.symbols() {
            let sym = self.alphabet.index(s);
            let mut next: Vec<StateId> =
                current.iter().flat_map(|&q| self.successors(q, sym).iter().copied()).collect();
            next.sort_unstable();
            next.dedup();
            current = next;
        }
        Ok(current.iter().any(|&q| self.is_final(q)))
    }

    /// Marks final every state from which a run of all-zero symbols reaches a
    /// final state, so the language becomes closed under removing trailing
    /// zero symbols.
    pub fn padding_closure(&self) -> Nfa {
        let mut out = self.clone();
        let n = self.num_states();
        // reverse edges on the zero symbol (index 0)
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n as StateId {
            for &t in self.successors(q, 0) {
                preds[t as usize].push(q);
            }
        }
        let mut stack: Vec<StateId> = (0..n as StateId).filter(|&q| self.is_final(q)).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q as usize] {
                if !out.finals[p as usize] {
                    out.finals[p as usize] = true;
                    stack.push(p);
                }
            }
        }
        out
    }

    /// Subset construction over reachable subsets. The empty subset is left
    /// implicit, so the result may be partial.
    pub fn determinize(&self) -> Dfa {
        let a = self.alphabet.size();
        let tracks = self.tracks();
        let mut index: HashMap<Vec<StateId>, StateId> = HashMap::new();
        let mut subsets: Vec<Vec<StateId>> = vec![self.initials.clone()];
        index.insert(self.initials.clone(), 0);
        let mut edges: Vec<Vec<Option<StateId>>> = Vec::new();
        let mut head = 0;
        let mut scratch = Vec::new();
        while head < subsets.len() {
            let mut row = vec![None; a];
            for (s, slot) in row.iter_mut().enumerate() {
                scratch.clear();
                for &q in &subsets[head] {
                    scratch.extend_from_slice(self.successors(q, s));
                }
                if scratch.is_empty() {
                    continue;
                }
                scratch.sort_unstable();
                scratch.dedup();
                let id = match index.get(&scratch) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len() as StateId;
                        index.insert(scratch.clone(), id);
                        subsets.push(scratch.clone());
                        id
                    }
                };
                *slot = Some(id);
            }
            edges.push(row);
            head += 1;
        }
        let mut d = Dfa::new(self.base, tracks, subsets.len()).expect("alphabet already validated");
        for (q, subset) in subsets.iter().enumerate() {
            let q = q as StateId;
            d.set_final(q, subset.iter().any(|&p| self.is_final(p))).expect("state in range");
            for (s, &t) in edges[q as usize].iter().enumerate() {
                d.set_edge(q, s, t);
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(r: u32) -> Base {
        Base::new(r).unwrap()
    }

    #[test]
    fn determinize_simple_union() {
        // accepts words over {0,1} ending in 1
        let mut n = Nfa::new(b(2), 1, 2).unwrap();
        n.add_initial(0).unwrap();
        n.add_transition(0, &[0], 0).unwrap();
        n.add_transition(0, &[1], 0).unwrap();
        n.add_transition(0, &[1], 1).unwrap();
        n.set_final(1, true).unwrap();
        let d = n.determinize();
        for x in 0..64u64 {
            let w = DigitWord::new(b(2), 1, (0..6).map(|i| vec![((x >> i) & 1) as u32]).collect())
                .unwrap();
            assert_eq!(d.run(&w).unwrap(), n.run(&w).unwrap(), "x = {x}");
            assert_eq!(d.run(&w).unwrap(), x >> 5 == 1);
        }
    }

    #[test]
    fn padding_closure_is_idempotent() {
        let mut n = Nfa::new(b(2), 1, 3).unwrap();
        n.add_initial(0).unwrap();
        n.add_transition(0, &[1], 1).unwrap();
        n.add_transition(1, &[0], 2).unwrap();
        n.set_final(2, true).unwrap();
        let once = n.padding_closure();
        assert!(once.is_final(1));
        assert!(!once.is_final(0));
        assert_eq!(once.padding_closure(), once);
    }

    #[test]
    fn empty_initial_set_rejects_everything() {
        let n = Nfa::new(b(3), 2, 1).unwrap();
        let d = n.determinize();
        assert_eq!(d.num_states(), 1);
        assert!(!d.accepts_values(&[0, 0]).unwrap());
    }
}

use std::collections::HashMap;

use super::{Dfa, StateId};
use crate::error::{Error, Result};

impl Dfa {
    /// The minimal complete automaton for the same language, canonically
    /// numbered. The sink is kept iff it is reachable.
    pub fn minimize(&self) -> Dfa {
        let d = self.canonical().complete().canonical();
        let n = d.num_states();
        let a = d.alphabet_size();

        // Moore partition refinement
        let mut class: Vec<u32> = (0..n as StateId).map(|q| d.is_final(q) as u32).collect();
        let mut count = {
            let mut seen = [false; 2];
            class.iter().for_each(|&c| seen[c as usize] = true);
            seen.iter().filter(|&&s| s).count()
        };
        let mut signature = vec![0u32; a + 1];
        loop {
            let mut ids: HashMap<Vec<u32>, u32> = HashMap::with_capacity(count * 2);
            let mut next = vec![0u32; n];
            for q in 0..n {
                signature[0] = class[q];
                for s in 0..a {
                    let t = d.step(q as StateId, s).expect("complete");
                    signature[s + 1] = class[t as usize];
                }
                let fresh = ids.len() as u32;
                next[q] = *ids.entry(signature.clone()).or_insert(fresh);
            }
            let refined = ids.len();
            class = next;
            if refined == count {
                break;
            }
            count = refined;
        }

        let mut out = Dfa::new(d.base(), d.tracks(), count).expect("alphabet already validated");
        out.set_initial(class[d.initial() as usize]).expect("class in range");
        for q in 0..n {
            let c = class[q];
            out.set_final(c, d.is_final(q as StateId)).expect("class in range");
            for s in 0..a {
                let t = d.step(q as StateId, s).expect("complete");
                out.set_edge(c, s, Some(class[t as usize]));
            }
        }
        out.canonical()
    }

    /// Whether this automaton is complete, fully reachable and minimal.
    pub fn is_minimal(&self) -> bool {
        self.is_complete()
            && self.canonical().num_states() == self.num_states()
            && self.minimize().num_states() == self.num_states()
    }

    /// Structural isomorphism of two minimal complete automata.
    pub fn isomorphic(&self, other: &Dfa) -> Result<bool> {
        if !self.is_minimal() || !other.is_minimal() {
            return Err(Error::NotMinimized);
        }
        if self.base() != other.base()
            || self.tracks() != other.tracks()
            || self.num_states() != other.num_states()
        {
            return Ok(false);
        }
        let n = self.num_states();
        let mut map = vec![StateId::MAX; n];
        let mut used = vec![false; n];
        let mut stack = vec![(self.initial(), other.initial())];
        map[self.initial() as usize] = other.initial();
        used[other.initial() as usize] = true;
        while let Some((p, q)) = stack.pop() {
            if self.is_final(p) != other.is_final(q) {
                return Ok(false);
            }
            for s in 0..self.alphabet_size() {
                let (p2, q2) = (self.step(p, s).expect("complete"), other.step(q, s).expect("complete"));
                match map[p2 as usize] {
                    StateId::MAX => {
                        if used[q2 as usize] {
                            return Ok(false);
                        }
                        map[p2 as usize] = q2;
                        used[q2 as usize] = true;
                        stack.push((p2, q2));
                    }
                    image if image != q2 => return Ok(false),
                    _ => {}
                }
            }
        }
        Ok(true)
    }
}

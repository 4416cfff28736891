//! Pigeonhole refutation of automata claiming to recognize
//! `{(2^k, 2^(2k)) : k ≥ 0}`, the graph of the binary interleaving pairing
//! restricted to `x₀ = 0`.

use std::fmt;

use num_traits::One;

use crate::automaton::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::numeral::{Base, Natural};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Accepted but outside the language.
    FalsePositive,
    /// In the language but rejected.
    FalseNegative,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::FalsePositive => "false_positive",
            WitnessKind::FalseNegative => "false_negative",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutationWitness {
    pub pair: (Natural, Natural),
    pub kind: WitnessKind,
}

impl fmt::Display for RefutationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.kind, self.pair.0, self.pair.1)
    }
}

fn pow2(e: usize) -> Natural {
    Natural::one() << e
}

/// Membership in `{(2^k, 2^(2k))}`.
pub fn in_pairing_language(x: &Natural, y: &Natural) -> bool {
    let is_pow2 = |v: &Natural| v.count_ones() == 1;
    is_pow2(x) && is_pow2(y) && y.trailing_zeros() == x.trailing_zeros().map(|k| 2 * k)
}

/// Finds a pair misclassified by `b`, a 2-track binary automaton.
///
/// First checks `(2^k, 2^(2k))` for `k ≤ S + 1`, `S` being the size of the
/// completed automaton. If all are accepted, the states reached after
/// `(0,0)^k (1,0)` for `k = 1..=S+1` must repeat, `s_a = s_b` with `a < b`,
/// and the accepting suffix for `(2^b, 2^(2b))` then also accepts
/// `(2^a, 2^(a+b))`.
pub fn refute_pairing(b: &Dfa) -> Result<RefutationWitness> {
    if b.base() != Base::new(2)? {
        return Err(Error::BaseMismatch { expected: 2, found: b.base().radix() });
    }
    if b.tracks() != 2 {
        return Err(Error::ArityMismatch { expected: 2, found: b.tracks() });
    }
    let c = b.complete();
    let size = c.num_states();

    let witness = match (0..=size + 1).find(|&k| !c.accepts_tuple(&[pow2(k), pow2(2 * k)]).unwrap_or(false)) {
        Some(k) => RefutationWitness { pair: (pow2(k), pow2(2 * k)), kind: WitnessKind::FalseNegative },
        None => {
            let zero = c.symbol_index(&[0, 0])?;
            let low = c.symbol_index(&[1, 0])?;
            let mut first_seen: Vec<Option<usize>> = vec![None; size];
            let mut q: StateId = c.initial();
            let mut found = None;
            for k in 1..=size + 1 {
                // q is the state after (0,0)^(k-1); s_k follows one more zero and (1,0)
                q = c.step(q, zero).expect("complete");
                let s = c.step(q, low).expect("complete");
                match first_seen[s as usize] {
                    Some(a) => {
                        found = Some((a, k));
                        break;
                    }
                    None => first_seen[s as usize] = Some(k),
                }
            }
            let (a, later) = found.ok_or_else(|| Error::Malformed("pigeonhole found no repeat".into()))?;
            RefutationWitness { pair: (pow2(a), pow2(a + later)), kind: WitnessKind::FalsePositive }
        }
    };

    let accepted = b.accepts_tuple(&[witness.pair.0.clone(), witness.pair.1.clone()])?;
    let member = in_pairing_language(&witness.pair.0, &witness.pair.1);
    if accepted == member {
        return Err(Error::Malformed(format!("witness {witness} is not misclassified")));
    }
    Ok(witness)
}

//! Automaton-level constructions behind the interpretations.

use std::collections::HashMap;

use crate::automaton::{Alphabet, Dfa, StateId};
use crate::error::{Error, Result};
use crate::numeral::Base;

/// Builds the reachable part of an automaton whose states are keys of type
/// `K`, starting from `start`; `next` returns the successor key on a symbol.
fn explore<K, F>(base: Base, tracks: usize, start: K, accepting: impl Fn(&K) -> bool, mut next: F) -> Result<Dfa>
where
    K: Clone + Eq + std::hash::Hash,
    F: FnMut(&K, usize) -> Option<K>,
{
    let alphabet = Alphabet::new(base, tracks)?;
    let mut ids: HashMap<K, StateId> = HashMap::new();
    let mut keys = vec![start.clone()];
    ids.insert(start, 0);
    let mut edges: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut head = 0;
    while head < keys.len() {
        let key = keys[head].clone();
        let row = (0..alphabet.size())
            .map(|s| {
                next(&key, s).map(|k| {
                    *ids.entry(k.clone()).or_insert_with(|| {
                        keys.push(k);
                        (keys.len() - 1) as StateId
                    })
                })
            })
            .collect();
        edges.push(row);
        head += 1;
    }
    let mut d = Dfa::new(base, tracks, keys.len())?;
    for (q, key) in keys.iter().enumerate() {
        d.set_final(q as StateId, accepting(key))?;
        for (s, &t) in edges[q].iter().enumerate() {
            d.set_edge(q as StateId, s, t);
        }
    }
    Ok(d)
}

/// Reads each `m`-tuple argument as the single number obtained by digit
/// interleaving: the `m` component digits of one level are fed one after the
/// other through a chain of fresh non-final states.
///
/// `a` has `m·r` tracks grouped by argument: tracks `m·j .. m·j+m` are the
/// components of argument `j`. The result has `r` tracks and accepts exactly
/// the words whose length is a multiple of `m` and which deinterleave to an
/// accepted tuple; use [`Dfa::close_padding`] to also accept the unpadded
/// encodings.
pub fn interleave_transform(a: &Dfa, m: usize, r: usize) -> Result<Dfa> {
    if m == 0 || r == 0 {
        return Err(Error::Malformed("interleave needs positive m and r".into()));
    }
    if !a.tracks().is_multiple_of(m) {
        return Err(Error::NotDivisible { tracks: a.tracks(), m });
    }
    if a.tracks() != m * r {
        return Err(Error::ArityMismatch { expected: m * r, found: a.tracks() });
    }
    if m == 1 {
        return Ok(a.clone());
    }
    let narrow = Alphabet::new(a.base(), r)?;
    let wide = a.alphabet();
    // key: original state plus the symbols read since leaving it
    explore(
        a.base(),
        r,
        (a.initial(), Vec::<usize>::new()),
        |(q, chain)| chain.is_empty() && a.is_final(*q),
        |(q, chain), s| {
            if chain.len() + 1 < m {
                let mut longer = chain.clone();
                longer.push(s);
                return Some((*q, longer));
            }
            let mut digits = vec![0; m * r];
            for (c, &sym) in chain.iter().chain(std::iter::once(&s)).enumerate() {
                for (j, d) in narrow.digits(sym).into_iter().enumerate() {
                    digits[m * j + c] = d;
                }
            }
            a.step(*q, wide.index(&digits)).map(|t| (t, Vec::new()))
        },
    )
}

/// Reads base-`k²` automata in base `k`: each wide digit `k·l + m` is fed as
/// `l` then `m`, through a fresh non-final intermediate state per
/// `(state, l)`. Like [`interleave_transform`], the result only accepts
/// even-length words until closed under padding.
pub fn base_square_transform(a: &Dfa) -> Result<Dfa> {
    let k = a.base().square_root().ok_or(Error::NotPerfectSquare(a.base().radix()))?;
    let r = a.tracks();
    let narrow = Alphabet::new(k, r)?;
    let wide = a.alphabet();
    explore(
        k,
        r,
        (a.initial(), None::<usize>),
        |(q, high)| high.is_none() && a.is_final(*q),
        |(q, high), s| match high {
            None => Some((*q, Some(s))),
            Some(h) => {
                let hi = narrow.digits(*h);
                let lo = narrow.digits(s);
                let digits: Vec<u32> = hi.iter().zip(&lo).map(|(l, m)| k.radix() * l + m).collect();
                a.step(*q, wide.index(&digits)).map(|t| (t, None))
            }
        },
    )
}

/// Moves a base-`k` automaton to base `k+1`: any symbol containing digit `k`
/// leads to a fresh non-final trap state; other transitions are unchanged.
pub fn digit_embed_transform(a: &Dfa) -> Result<Dfa> {
    let k = a.base().radix();
    let wider = a.base().succ()?;
    let r = a.tracks();
    let narrow = a.alphabet();
    let alphabet = Alphabet::new(wider, r)?;
    let mut d = Dfa::new(wider, r, a.num_states() + 1)?;
    let trap = a.num_states() as StateId;
    d.set_initial(a.initial())?;
    for s in 0..alphabet.size() {
        let digits = alphabet.digits(s);
        let old = (!digits.contains(&k)).then(|| narrow.index(&digits));
        for q in 0..a.num_states() as StateId {
            d.set_edge(q, s, old.map_or(Some(trap), |o| a.step(q, o)));
        }
        d.set_edge(trap, s, Some(trap));
    }
    for q in a.finals() {
        d.set_final(q, true)?;
    }
    Ok(d)
}

/// One track over base `k+1`: numbers written without digit `k`.
pub fn domain_automaton_avoiding(k: Base) -> Result<Dfa> {
    let wider = k.succ()?;
    let mut d = Dfa::new(wider, 1, 2)?;
    d.set_final(0, true)?;
    for digit in 0..k.radix() {
        d.set_transition(0, &[digit], 0)?;
    }
    d.set_transition(0, &[k.radix()], 1)?;
    for digit in 0..wider.radix() {
        d.set_transition(1, &[digit], 1)?;
    }
    Ok(d)
}

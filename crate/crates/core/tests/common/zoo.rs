//! Candidate automata for `{(2^k, 2^2k)}` over base 2, tracks `(x, y)`.

use buchi::atoms::eq_automaton;
use buchi::logic::{compile, parse};
use buchi::{Dfa, StateId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::b;

fn formula(text: &str) -> Dfa {
    compile(&parse(text).unwrap(), b(2)).unwrap()
}

/// Right on `(2^k, 2^2k)` exactly for `k < limit`; uses
/// `limit·(limit+1)/2 + 2` states before completion.
pub fn truncated(limit: usize) -> Dfa {
    let mut d = Dfa::new(b(2), 2, 1).unwrap();
    let count: Vec<StateId> = (0..limit).map(|_| d.add_state()).collect();
    d.set_initial(count[0]).unwrap();
    let accept = d.add_state();
    d.set_final(accept, true).unwrap();
    d.set_transition(accept, &[0, 0], accept).unwrap();
    d.set_transition(count[0], &[1, 1], accept).unwrap();
    for k in 1..limit {
        d.set_transition(count[k - 1], &[0, 0], count[k]).unwrap();
        let mut q = d.add_state();
        d.set_transition(count[k], &[1, 0], q).unwrap();
        for _ in 1..k {
            let next = d.add_state();
            d.set_transition(q, &[0, 0], next).unwrap();
            q = next;
        }
        d.set_transition(q, &[0, 1], accept).unwrap();
    }
    d
}

/// Accepts `(2^k, 2^j)` whenever `j ≡ 2k (mod p)`: every member, plus
/// infinitely many others. `2p + 1` states before completion.
pub fn modular(p: usize) -> Dfa {
    let mut d = Dfa::new(b(2), 2, 2 * p + 1).unwrap();
    let first = |c: usize| c as StateId;
    // second phase: r ≡ k - 1 - (zeros read since the 1 of x)
    let second = |r: usize| (p + r) as StateId;
    let accept = (2 * p) as StateId;
    d.set_final(accept, true).unwrap();
    d.set_transition(accept, &[0, 0], accept).unwrap();
    d.set_transition(first(0), &[1, 1], accept).unwrap();
    for c in 0..p {
        d.set_transition(first(c), &[0, 0], first((c + 1) % p)).unwrap();
        d.set_transition(first(c), &[1, 0], second((c + p - 1) % p)).unwrap();
        d.set_transition(second(c), &[0, 0], second((c + p - 1) % p)).unwrap();
    }
    d.set_transition(second(0), &[0, 1], accept).unwrap();
    d
}

/// Hand-built candidates, none with more than 12 states.
pub fn hand_built() -> Vec<(&'static str, Dfa)> {
    vec![
        ("equality", eq_automaton(b(2))),
        ("universal", Dfa::universal(b(2), 2).unwrap()),
        ("empty", Dfa::empty(b(2), 2).unwrap()),
        ("only (1, 1)", formula("x = 1 & y = 1")),
        ("truncated 2", truncated(2)),
        ("truncated 3", truncated(3)),
        ("truncated 4", truncated(4)),
        ("powers of two", formula("V(x) = x & V(y) = y & !(x = 0) & !(y = 0)")),
        ("powers of two, x ≤ y", formula("V(x) = x & V(y) = y & !(x = 0) & x <= y")),
        ("powers of two, y ≠ 2x", formula("V(x) = x & V(y) = y & !(x = 0) & !(y = x + x)")),
        ("modular 2", modular(2)),
        ("modular 3", modular(3)),
        ("modular 4", modular(4)),
        ("modular 5", modular(5)),
        ("swapped powers", formula("V(x) = x & V(y) = y & !(y = 0) & y <= x")),
    ]
}

/// A random partial automaton with at most `max_states` states.
pub fn random_dfa(rng: &mut ChaCha8Rng, max_states: usize) -> Dfa {
    let n = rng.gen_range(1..=max_states);
    let mut d = Dfa::new(b(2), 2, n).unwrap();
    for q in 0..n as StateId {
        d.set_final(q, rng.gen_bool(0.4)).unwrap();
        for s in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            if rng.gen_bool(0.85) {
                d.set_transition(q, &s, rng.gen_range(0..n) as StateId).unwrap();
            }
        }
    }
    d
}

pub fn random_zoo(count: usize, max_states: usize, seed: u64) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_dfa(&mut rng, max_states)).collect()
}

//! The equality automaton before and after interleaving, built state by
//! state.

use buchi::Dfa;

use super::b;

pub fn equality_machine() -> Dfa {
    let mut d = Dfa::new(b(2), 2, 2).unwrap();
    d.set_final(0, true).unwrap();
    for s in [[0, 0], [1, 1]] {
        d.set_transition(0, &s, 0).unwrap();
    }
    for s in [[1, 0], [0, 1]] {
        d.set_transition(0, &s, 1).unwrap();
    }
    for s in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        d.set_transition(1, &s, 1).unwrap();
    }
    d
}

/// States in order q0, q0,0, q0,1, q1, q1,0, q1,1.
pub fn interleaved_machine() -> Dfa {
    let mut d = Dfa::new(b(2), 1, 6).unwrap();
    let (q0, q00, q01, q1, q10, q11) = (0, 1, 2, 3, 4, 5);
    d.set_final(q0, true).unwrap();
    for (from, digit, to) in [
        (q0, 0, q00),
        (q0, 1, q01),
        (q00, 1, q1),
        (q00, 0, q0),
        (q01, 0, q1),
        (q01, 1, q0),
        (q1, 0, q10),
        (q1, 1, q11),
        (q10, 0, q1),
        (q10, 1, q1),
        (q11, 0, q1),
        (q11, 1, q1),
    ] {
        d.set_transition(from, &[digit], to).unwrap();
    }
    d
}

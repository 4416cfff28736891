//! Base automata for the signature of `BA_n`.

use crate::automaton::Dfa;
use crate::numeral::{to_digits, Base, Natural};

/// `x = y`: one accepting state looping on equal digit pairs.
pub fn eq_automaton(base: Base) -> Dfa {
    let mut d = Dfa::new(base, 2, 1).expect("two-track alphabet");
    d.set_final(0, true).unwrap();
    for x in 0..base.radix() {
        d.set_transition(0, &[x, x], 0).unwrap();
    }
    d
}

/// `x + y = z`, states tracking the carry.
pub fn add_automaton(base: Base) -> Dfa {
    let radix = base.radix();
    let mut d = Dfa::new(base, 3, 2).expect("three-track alphabet");
    d.set_final(0, true).unwrap();
    for carry in 0..2 {
        for a in 0..radix {
            for b in 0..radix {
                let total = a + b + carry;
                d.set_transition(carry, &[a, b, total % radix], total / radix).unwrap();
            }
        }
    }
    d
}

/// Graph of `V_n`: accepts `(x, y)` iff `y` is the largest power of `n`
/// dividing `x`, with `V_n(0) = 0`.
pub fn valuation_automaton(base: Base) -> Dfa {
    const BEFORE: u32 = 0;
    const AFTER: u32 = 1;
    let mut d = Dfa::new(base, 2, 2).expect("two-track alphabet");
    d.set_final(BEFORE, true).unwrap();
    d.set_final(AFTER, true).unwrap();
    d.set_transition(BEFORE, &[0, 0], BEFORE).unwrap();
    for x in 1..base.radix() {
        d.set_transition(BEFORE, &[x, 1], AFTER).unwrap();
    }
    for x in 0..base.radix() {
        d.set_transition(AFTER, &[x, 0], AFTER).unwrap();
    }
    d
}

/// Accepts exactly `c` (with any trailing zero padding).
pub fn const_automaton(base: Base, c: &Natural) -> Dfa {
    let digits = to_digits(c, base).into_digits();
    let mut d = Dfa::new(base, 1, digits.len() + 1).expect("one-track alphabet");
    for (i, &digit) in digits.iter().enumerate() {
        d.set_transition(i as u32, &[digit], i as u32 + 1).unwrap();
    }
    let last = digits.len() as u32;
    d.set_final(last, true).unwrap();
    d.set_transition(last, &[0], last).unwrap();
    d
}

/// Every natural, one track.
pub fn full_domain(base: Base) -> Dfa {
    Dfa::universal(base, 1).expect("one-track alphabet")
}

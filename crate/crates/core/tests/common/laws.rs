//! Random machines and words, and the automata the library emits.

use buchi::atoms::{add_automaton, const_automaton, eq_automaton, full_domain, valuation_automaton};
use buchi::interp::{build_interpretation, identity_family, one_dimensionalize};
use buchi::logic::{compile, parse};
use buchi::{Base, Dfa, DigitWord, Natural, StateId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::b;
use super::battery::BATTERY;

pub fn random_dfa(seed: u64, base: Base, tracks: usize, max_states: usize) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_states);
    let mut d = Dfa::new(base, tracks, n).unwrap();
    let symbols = base.radix().pow(tracks as u32);
    for q in 0..n as StateId {
        d.set_final(q, rng.gen_bool(0.4)).unwrap();
        for s in 0..symbols {
            if rng.gen_bool(0.8) {
                let digits: Vec<u32> = (0..tracks)
                    .map(|t| (s / base.radix().pow((tracks - 1 - t) as u32)) % base.radix())
                    .collect();
                d.set_transition(q, &digits, rng.gen_range(0..n) as StateId).unwrap();
            }
        }
    }
    d
}

pub fn random_word(rng: &mut ChaCha8Rng, base: Base, tracks: usize, max_len: usize) -> DigitWord {
    let len = rng.gen_range(0..=max_len);
    let symbols = (0..len).map(|_| (0..tracks).map(|_| rng.gen_range(0..base.radix())).collect()).collect();
    DigitWord::new(base, tracks, symbols).unwrap()
}

/// A word whose verdict changes when zero symbols are appended, among 1000
/// random words.
pub fn padding_violation(d: &Dfa, seed: u64) -> Option<DigitWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..1000).find_map(|_| {
        let w = random_word(&mut rng, d.base(), d.tracks(), 14);
        let extra = rng.gen_range(1..=4);
        (d.run(&w).unwrap() != d.run(&w.padded(w.len() + extra)).unwrap()).then_some(w)
    })
}

/// Atoms, compiled battery formulas and interpretation automata.
pub fn emitted_automata() -> Vec<(String, Dfa)> {
    let mut emitted: Vec<(String, Dfa)> = Vec::new();
    for radix in [2, 3, 4, 10] {
        let base = b(radix);
        emitted.push((format!("eq {radix}"), eq_automaton(base)));
        emitted.push((format!("add {radix}"), add_automaton(base)));
        emitted.push((format!("val {radix}"), valuation_automaton(base)));
        emitted.push((format!("const {radix}"), const_automaton(base, &Natural::from(37u32))));
        emitted.push((format!("full {radix}"), full_domain(base)));
    }
    for case in BATTERY {
        for radix in [2, 3] {
            emitted.push((format!("{} in base {radix}", case.text), compile(&parse(case.text).unwrap(), b(radix)).unwrap()));
        }
    }
    for (k, l) in [(3, 2), (2, 3), (5, 2), (4, 3)] {
        let i = build_interpretation(b(k), b(l)).unwrap();
        for (name, d) in i.automata() {
            emitted.push((format!("{name} of {k} in {l}"), d.clone()));
        }
    }
    for m in [2, 3] {
        let i = one_dimensionalize(&identity_family(b(2), m).unwrap()).unwrap();
        for (name, d) in i.automata() {
            emitted.push((format!("{name} interleaved {m}"), d.clone()));
        }
    }
    emitted
}

mod common;

use buchi::interp::{refute_pairing, RefutationWitness, WitnessKind};
use buchi::Dfa;
use common::zoo::{hand_built, modular, random_dfa, random_zoo, truncated};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn member(x: u128, y: u128) -> bool {
    x.is_power_of_two() && y.is_power_of_two() && y.trailing_zeros() == 2 * x.trailing_zeros()
}

fn verify(name: &str, d: &Dfa, w: &RefutationWitness) {
    let x = u128::try_from(&w.pair.0).unwrap();
    let y = u128::try_from(&w.pair.1).unwrap();
    let accepted = d.accepts_values(&[x as u64, y as u64]).unwrap();
    let inside = member(x, y);
    assert_ne!(accepted, inside, "{name}: {w} is classified correctly");
    match w.kind {
        WitnessKind::FalsePositive => assert!(accepted && !inside, "{name}: {w}"),
        WitnessKind::FalseNegative => assert!(!accepted && inside, "{name}: {w}"),
    }
}

fn correct_on_members(d: &Dfa, up_to: u32) -> bool {
    (0..=up_to).all(|k| d.accepts_values(&[1 << k, 1 << (2 * k)]).unwrap())
}

#[test]
fn membership_predicate() {
    assert!(member(1, 1) && member(2, 4) && member(4, 16) && member(1 << 20, 1 << 40));
    assert!(!member(0, 0) && !member(2, 8) && !member(3, 9) && !member(4, 8));
}

#[test]
fn hand_built_zoo_is_refuted() {
    let zoo = hand_built();
    assert!(zoo.len() >= 10);
    for (name, d) in &zoo {
        assert!(d.num_states() <= 12, "{name} has {} states", d.num_states());
        let w = refute_pairing(d).unwrap();
        verify(name, d, &w);
        let size = d.complete().num_states() as u32;
        if correct_on_members(d, size + 1) {
            assert_eq!(w.kind, WitnessKind::FalsePositive, "{name}");
        }
    }
}

#[test]
fn zoo_includes_machines_right_on_every_small_member() {
    let right: Vec<&str> = hand_built()
        .iter()
        .filter(|(_, d)| correct_on_members(d, d.complete().num_states() as u32))
        .map(|(name, _)| *name)
        .collect();
    assert!(right.len() >= 4, "{right:?}");
}

#[test]
fn truncated_machines_fail_exactly_at_their_limit() {
    for limit in 1..=4 {
        let d = truncated(limit);
        let w = refute_pairing(&d).unwrap();
        assert_eq!(w.kind, WitnessKind::FalseNegative);
        assert_eq!(u128::try_from(&w.pair.0).unwrap(), 1 << limit);
    }
}

#[test]
fn modular_machines_accept_every_member() {
    for p in 1..=5 {
        let d = modular(p);
        assert!(correct_on_members(&d, 30), "p={p}");
        let w = refute_pairing(&d).unwrap();
        verify("modular", &d, &w);
        assert_eq!(w.kind, WitnessKind::FalsePositive);
    }
}

#[test]
fn hundred_random_machines_are_refuted() {
    for (i, d) in random_zoo(100, 8, 0xB0C4).iter().enumerate() {
        assert!(d.num_states() <= 8);
        let w = refute_pairing(d).unwrap();
        verify(&format!("random #{i}"), d, &w);
    }
}

proptest! {
    #[test]
    fn every_random_machine_yields_a_verified_witness(seed in any::<u64>(), max in 1usize..=8) {
        let d = random_dfa(&mut ChaCha8Rng::seed_from_u64(seed), max);
        let w = refute_pairing(&d).unwrap();
        verify("random", &d, &w);
    }
}

mod common;

use buchi::numeral::{
    digitavoid_decode, digitavoid_encode, from_digits, interleave_decode, interleave_encode, pairgroup_decode,
    pairgroup_encode, to_digits,
};
use buchi::{Codec, Natural};
use common::b;
use proptest::prelude::*;

fn n(x: u64) -> Natural {
    Natural::from(x)
}

#[test]
fn digits_round_trip_below_ten_thousand() {
    for radix in 2..=10 {
        for x in 0..10_000u64 {
            let seq = to_digits(&n(x), b(radix));
            assert_eq!(from_digits(seq.digits(), b(radix)).unwrap(), n(x));
            assert_ne!(seq.digits().last(), Some(&0));
        }
    }
}

#[test]
fn interleave_is_a_bijection_below_ten_thousand() {
    for radix in [2, 3] {
        for m in 1..=3 {
            for y in 0..10_000u64 {
                let parts = interleave_decode(&n(y), b(radix), m);
                assert_eq!(parts.len(), m);
                assert_eq!(interleave_encode(&parts, b(radix)), n(y), "radix {radix}, m {m}, y {y}");
            }
        }
    }
}

#[test]
fn pairgroup_is_a_bijection_below_ten_thousand() {
    for k in 2..=5 {
        for y in 0..10_000u64 {
            assert_eq!(pairgroup_encode(&pairgroup_decode(&n(y), b(k)), b(k)), n(y));
            assert_eq!(pairgroup_decode(&pairgroup_encode(&n(y), b(k)), b(k)), n(y));
        }
    }
}

#[test]
fn digitavoid_round_trip_and_image() {
    for k in 2..=5 {
        let wide = b(k + 1);
        for x in 0..10_000u64 {
            assert_eq!(digitavoid_decode(&digitavoid_encode(&n(x), b(k)), b(k)).unwrap(), n(x));
            let has_k = to_digits(&n(x), wide).digits().contains(&k);
            assert_eq!(digitavoid_decode(&n(x), b(k)).is_err(), has_k, "k {k}, y {x}");
        }
    }
}

#[test]
fn composed_codec_round_trip() {
    let chain = Codec::Compose(vec![
        Codec::DigitAvoid { k: b(2) },
        Codec::DigitAvoid { k: b(3) },
        Codec::PairGroup { k: b(2) },
    ]);
    chain.validate().unwrap();
    let mut image = Vec::new();
    for x in 0..2_000u64 {
        let y = chain.apply(&[n(x)]).unwrap();
        assert_eq!(chain.invert(&y), Some(vec![n(x)]));
        image.push(y);
    }
    // strictly increasing, so also injective
    assert!(image.windows(2).all(|w| w[0] < w[1]));
    let members = (0..10_000u64).filter(|&y| chain.contains(&n(y))).count();
    assert_eq!(members, image.iter().filter(|y| **y < n(10_000)).count());
}

#[test]
fn ill_formed_codecs_are_rejected() {
    let bad = Codec::Compose(vec![Codec::DigitAvoid { k: b(2) }, Codec::PairGroup { k: b(2) }]);
    assert!(bad.validate().is_err());
    let multi = Codec::Compose(vec![Codec::DigitAvoid { k: b(2) }, Codec::Interleave { m: 2, base: b(3) }]);
    assert!(multi.validate().is_err());
    assert!(Codec::Interleave { m: 0, base: b(2) }.validate().is_err());
}

proptest! {
    #[test]
    fn interleave_decode_inverts_encode(radix in 2u32..=10, xs in prop::collection::vec(0u64..1_000_000, 1..=4)) {
        let parts: Vec<Natural> = xs.iter().map(|&x| n(x)).collect();
        let y = interleave_encode(&parts, b(radix));
        prop_assert_eq!(interleave_decode(&y, b(radix), parts.len()), parts);
    }

    #[test]
    fn digitavoid_is_monotone(k in 2u32..=9, x in 0u64..1_000_000, y in 0u64..1_000_000) {
        let (ex, ey) = (digitavoid_encode(&n(x), b(k)), digitavoid_encode(&n(y), b(k)));
        prop_assert_eq!(x.cmp(&y), ex.cmp(&ey));
    }

    #[test]
    fn pairgroup_preserves_order(k in 2u32..=6, x in 0u64..1_000_000, y in 0u64..1_000_000) {
        let (ex, ey) = (pairgroup_encode(&n(x), b(k)), pairgroup_encode(&n(y), b(k)));
        prop_assert_eq!(x == y, ex == ey);
    }

    #[test]
    fn digits_round_trip(radix in 2u32..=36, x in any::<u64>()) {
        let seq = to_digits(&n(x), b(radix));
        prop_assert_eq!(seq.value(), n(x));
    }
}

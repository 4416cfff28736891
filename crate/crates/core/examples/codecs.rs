// The encodings behind the interpretations, on small numbers.

use buchi::numeral::{
    digitavoid_decode, digitavoid_encode, interleave_decode, interleave_encode, pairgroup_decode, pairgroup_encode,
    to_digits,
};
use buchi::{Base, Codec, Natural};

pub fn run_example() -> buchi::Result<()> {
    let two = Base::new(2)?;
    let three = Base::new(3)?;
    let n = Natural::from;

    let pair = [n(5u32), n(3u32)];
    let y = interleave_encode(&pair, two);
    println!("interleave (5, 3) = {y} = {}", to_digits(&y, two));
    println!("and back: {:?}", interleave_decode(&y, two, 2));

    let x = n(11u32);
    let y = pairgroup_encode(&x, two);
    println!("11 in base 4 is {}, as pairs of bits {} = {y}", to_digits(&x, two.squared()?), to_digits(&y, two));
    println!("and back: {}", pairgroup_decode(&y, two));

    let y = digitavoid_encode(&n(6u32), two);
    println!("6 = {} reread in base 3 is {y}", to_digits(&n(6u32), two));
    println!("5 = {} has a 2: {}", to_digits(&n(5u32), three), digitavoid_decode(&n(5u32), two).is_err());

    let chain = Codec::Compose(vec![
        Codec::DigitAvoid { k: two },
        Codec::DigitAvoid { k: three },
        Codec::PairGroup { k: two },
    ]);
    chain.validate()?;
    for x in 0u32..6 {
        let y = chain.apply(&[n(x)])?;
        println!("chain({x}) = {y}, back {:?}", chain.invert(&y));
    }
    println!("3 in the image: {}", chain.contains(&n(3u32)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

// Turning a two-dimensional interpretation into a one-dimensional one: the
// identity interpretation of BA_2 on pairs is read through digit
// interleaving.

use buchi::interp::{identity_family, one_dimensionalize};
use buchi::numeral::interleave_decode;
use buchi::oracle::{check_correspondence, Relation};
use buchi::{Base, Natural};

pub fn run_example() -> buchi::Result<()> {
    let base = Base::new(2)?;
    let family = identity_family(base, 2)?;
    println!(
        "pairs: equality on {} tracks, addition on {}, valuation on {}",
        family.equality.tracks(),
        family.addition.tracks(),
        family.valuation.tracks()
    );
    let one = one_dimensionalize(&family)?;
    println!("codec {:?}", one.codec);
    for (name, dfa) in one.automata() {
        println!("  {name}: {} tracks, {} states", dfa.tracks(), dfa.num_states());
    }

    // 6 = 110 splits into (2, 1) and 3 = 11 into (1, 1); the sum (3, 2)
    // interleaves to 1101 = 13
    let parts = |y: u64| interleave_decode(&Natural::from(y), base, 2);
    println!("6 -> {:?}, 3 -> {:?}, 13 -> {:?}", parts(6), parts(3), parts(13));
    println!("addition accepts (6, 3, 13): {}", one.addition.accepts_values(&[6, 3, 13])?);
    println!("addition accepts (6, 3, 9): {}", one.addition.accepts_values(&[6, 3, 9])?);

    for relation in [Relation::Equality, Relation::Addition, Relation::Valuation] {
        let dfa = match relation {
            Relation::Equality => &one.equality,
            Relation::Addition => &one.addition,
            _ => &one.valuation,
        };
        println!("{relation}: {}", check_correspondence(dfa, relation, &one.codec, 6)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

// Running base-2 automata over ternary numerals that never use digit 2.

use buchi::atoms::{add_automaton, eq_automaton, valuation_automaton};
use buchi::interp::{digit_embed_transform, domain_automaton_avoiding};
use buchi::oracle::{check_correspondence, Relation};
use buchi::{Base, Codec};

pub fn run_example() -> buchi::Result<()> {
    let k = Base::new(2)?;
    let domain = domain_automaton_avoiding(k)?;
    let members: Vec<u64> = domain.enumerate_accepted(40).into_iter().map(|v| v[0]).collect();
    println!("ternary numbers without a 2 below 40: {members:?}");

    let add = digit_embed_transform(&add_automaton(k))?;
    // ternary 1 + 10 = 11 reads as binary 1 + 2 = 3
    println!("(1, 3, 4) in the embedded sum: {}", add.accepts_values(&[1, 3, 4])?);
    println!("(1, 2, 3) in the embedded sum: {}", add.accepts_values(&[1, 2, 3])?);

    let codec = Codec::DigitAvoid { k };
    for (relation, atom) in [
        (Relation::Equality, eq_automaton(k)),
        (Relation::Addition, add_automaton(k)),
        (Relation::Valuation, valuation_automaton(k)),
    ] {
        let embedded = digit_embed_transform(&atom)?;
        println!(
            "{relation}: {} -> {} states, {}",
            atom.num_states(),
            embedded.num_states(),
            check_correspondence(&embedded, relation, &codec, 30)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

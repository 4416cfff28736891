// Reading base-4 automata in base 2 and base-9 automata in base 3.

use buchi::atoms::{add_automaton, eq_automaton, valuation_automaton};
use buchi::interp::base_square_transform;
use buchi::numeral::pairgroup_decode;
use buchi::oracle::{check_correspondence, Relation};
use buchi::{Base, Codec, Natural};

pub fn run_example() -> buchi::Result<()> {
    for k in [2, 3] {
        let narrow = Base::new(k)?;
        let wide = narrow.squared()?;
        let codec = Codec::PairGroup { k: narrow };
        for (relation, atom) in [
            (Relation::Equality, eq_automaton(wide)),
            (Relation::Addition, add_automaton(wide)),
            (Relation::Valuation, valuation_automaton(wide)),
        ] {
            let literal = base_square_transform(&atom)?;
            let closed = literal.close_padding().minimize();
            println!(
                "{relation} base {wide} -> {narrow}: {} states, {} literal, {} closed and minimal",
                atom.num_states(),
                literal.num_states(),
                closed.num_states()
            );
            println!("    {}", check_correspondence(&closed, relation, &codec, 40)?);
        }
    }

    // base-4 digit 2·l + m is written l then m, least significant first: 1
    // becomes 0,1 = 2 and 9 (digits 1,2) becomes 0,1,1,0 = 6
    let k = Base::new(2)?;
    for y in [2u64, 6, 9] {
        println!("pairgroup_decode({y}) = {}", pairgroup_decode(&Natural::from(y), k));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

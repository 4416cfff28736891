// Compiling formulas with free variables to minimal automata and listing
// the small tuples they accept.

use buchi::logic::{compile, parse, satisfying_assignments};
use buchi::Base;

pub fn run_example() -> buchi::Result<()> {
    let base = Base::new(2)?;
    for text in ["E y (x = y + y)", "V(x) = x", "x < y & V(y) = y", "V(x + y) = z & z = 2"] {
        let f = parse(text)?;
        let dfa = compile(&f, base)?;
        let small = satisfying_assignments(&f, base, 9)?;
        println!("{text}");
        println!("    tracks {:?}, {} states", f.free_vars(), dfa.num_states());
        println!("    accepted below 9: {:?}", small.iter().take(12).collect::<Vec<_>>());
    }

    // the powers of two, drawn for Graphviz
    let powers = compile(&parse("V(x) = x")?, base)?;
    print!("{}", powers.to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

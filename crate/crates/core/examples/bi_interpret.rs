// Interpreting BA_k in BA_l for a few pairs of bases, then checking the
// result against plain arithmetic.

use buchi::interp::{build_interpretation, format_plan, plan_interpretation};
use buchi::oracle::{check_interpretation, check_internal_model};
use buchi::{Base, Natural};

pub fn run_example() -> buchi::Result<()> {
    for (k, l) in [(2, 2), (3, 2), (2, 3), (5, 2), (4, 3)] {
        let (k, l) = (Base::new(k)?, Base::new(l)?);
        let plan = plan_interpretation(k, l)?;
        let interp = build_interpretation(k, l)?;
        let sizes: Vec<String> =
            interp.automata().iter().map(|(name, d)| format!("{name} {}", d.num_states())).collect();
        println!("BA_{k} in BA_{l}: {}", format_plan(&plan));
        println!("    states: {}", sizes.join(", "));
        println!("    correspondence below 30: {}", check_interpretation(&interp, 30)?);
        println!("    internal model below 500: {}", check_internal_model(&interp, 500, 8)?);
    }

    // the composed codec for BA_3 in BA_2: ternary digits reread in base 4,
    // then each base-4 digit split into two bits
    let interp = build_interpretation(Base::new(3)?, Base::new(2)?)?;
    for x in [1u32, 2, 5, 7] {
        let y = interp.codec.apply(&[Natural::from(x)])?;
        println!("c({x}) = {y}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

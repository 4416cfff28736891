// Deciding sentences of (ℕ, =, +, V_n) in a few bases.

use buchi::logic::{decide, parse};
use buchi::Base;

pub fn run_example() -> buchi::Result<()> {
    let sentences = [
        "A x A y (x + y = y + x)",
        "A x E y (y + y = x)",
        "A x E y (y + y = x | y + y + 1 = x)",
        "E x (V(x) = x & !(x = 0) & !(x = 1))",
        "A x (V(x) = x -> V(x + x) = x + x)",
        "A x (V(x) = 1 | V(x) = x | !(V(x) = 1))",
        "E x (x + x + x = 10)",
    ];
    for text in sentences {
        let f = parse(text)?;
        let verdicts: Vec<String> = [2, 3, 5]
            .into_iter()
            .map(|n| Ok(format!("base {n}: {}", decide(&f, Base::new(n)?)?)))
            .collect::<buchi::Result<_>>()?;
        println!("{text}\n    {}", verdicts.join(", "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

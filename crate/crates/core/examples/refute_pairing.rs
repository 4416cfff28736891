// No automaton recognizes {(2^k, 2^2k)}: every candidate gets a pair it
// classifies wrongly.

use buchi::atoms::eq_automaton;
use buchi::interp::refute_pairing;
use buchi::logic::{compile, parse};
use buchi::{Base, Dfa};

/// Accepts (2^k, 2^2k) exactly for k < limit, and some junk beyond.
fn near_miss(limit: u32) -> buchi::Result<Dfa> {
    // states: 0 start, 1..=limit counting leading (0,0), then a countdown
    // of the y-zeros after the (1,0); the last state is final
    let b = Base::new(2)?;
    let mut d = Dfa::new(b, 2, 1)?;
    let count: Vec<u32> = (0..=limit).map(|_| d.add_state()).collect();
    for i in 0..limit as usize {
        d.set_transition(count[i], &[0, 0], count[i + 1])?;
    }
    d.set_initial(count[0])?;
    let accept = d.add_state();
    d.set_final(accept, true)?;
    d.set_transition(accept, &[0, 0], accept)?;
    for (k, &c) in count.iter().enumerate().take(limit as usize) {
        // after (0,0)^k (1,0) we need (0,0)^(k-1) (0,1), or (1,1) when k = 0
        if k == 0 {
            d.set_transition(c, &[1, 1], accept)?;
            continue;
        }
        let mut q = d.add_state();
        d.set_transition(c, &[1, 0], q)?;
        for _ in 1..k {
            let next = d.add_state();
            d.set_transition(q, &[0, 0], next)?;
            q = next;
        }
        d.set_transition(q, &[0, 1], accept)?;
    }
    Ok(d)
}

pub fn run_example() -> buchi::Result<()> {
    let b = Base::new(2)?;
    let candidates = [
        ("equality", eq_automaton(b)),
        ("everything", Dfa::universal(b, 2)?),
        ("nothing", Dfa::empty(b, 2)?),
        ("right up to k = 2", near_miss(3)?),
        ("right up to k = 4", near_miss(5)?),
        // accepts every member, so only the pigeonhole argument catches it
        ("powers of two, x ≤ y", compile(&parse("V(x) = x & V(y) = y & !(x = 0) & x <= y")?, b)?),
    ];
    for (name, dfa) in candidates {
        println!("{name} ({} states): {}", dfa.complete().num_states(), refute_pairing(&dfa)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

// The equality automaton over base 2 and its interleaved form, which reads
// `x` as the pair of numbers formed by its even and odd binary digits.

use buchi::interp::interleave_transform;
use buchi::logic::{compile, parse};
use buchi::{Base, Dfa};

fn equality_machine() -> buchi::Result<Dfa> {
    let mut d = Dfa::new(Base::new(2)?, 2, 2)?;
    d.set_final(0, true)?;
    d.set_transition(0, &[0, 0], 0)?;
    d.set_transition(0, &[1, 1], 0)?;
    d.set_transition(0, &[1, 0], 1)?;
    d.set_transition(0, &[0, 1], 1)?;
    for s in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        d.set_transition(1, &s, 1)?;
    }
    Ok(d)
}

/// States: q0, q00, q01, q1, q10, q11.
fn interleaved_machine() -> buchi::Result<Dfa> {
    let mut d = Dfa::new(Base::new(2)?, 1, 6)?;
    let (q0, q00, q01, q1, q10, q11) = (0, 1, 2, 3, 4, 5);
    d.set_final(q0, true)?;
    for (from, digit, to) in [
        (q0, 0, q00),
        (q0, 1, q01),
        (q00, 1, q1),
        (q00, 0, q0),
        (q01, 0, q1),
        (q01, 1, q0),
        (q1, 0, q10),
        (q1, 1, q11),
        (q10, 0, q1),
        (q10, 1, q1),
        (q11, 0, q1),
        (q11, 1, q1),
    ] {
        d.set_transition(from, &[digit], to)?;
    }
    Ok(d)
}

pub fn run_example() -> buchi::Result<()> {
    let compiled = compile(&parse("x = y")?, Base::new(2)?)?;
    println!("compiled x = y is the hand-built machine: {}", compiled.isomorphic(&equality_machine()?)?);

    let transformed = interleave_transform(&equality_machine()?, 2, 1)?;
    println!("interleaved: {} states", transformed.num_states());
    println!("same machine up to renaming: {}", transformed.canonical() == interleaved_machine()?.canonical());
    println!("same minimal machine: {}", transformed.minimize().isomorphic(&interleaved_machine()?.minimize())?);

    // 9 = 1001: even digits 1,0 and odd digits 0,1 read x0 = 1, x1 = 2
    for y in [0u64, 3, 9, 12, 15] {
        println!("accepts {y}: {}", transformed.accepts_values(&[y])?);
    }
    // chain states are not final: zero written as one padding digit is
    // rejected until the machine is closed under padding
    let zero: &[u32] = &[0];
    println!("accepts [0]: {}", transformed.accepts_digits(&[zero]));
    println!("after closing: {}", transformed.close_padding().accepts_digits(&[zero]));
    print!("{}", transformed.to_dot());
    Ok(())
}

#[allow(dead_code)]
fn main() -> buchi::Result<()> {
    run_example()
}

//! Büchi arithmetics `BA_n = Th(ℕ, =, +, V_n)` as an automata-based decision
//! procedure, plus the automaton transforms that interpret one Büchi
//! arithmetic in another.
//!
//! * [`numeral`]: LSD-first base-`n` numerals and the codecs behind every
//!   transform (digit interleaving, pair grouping, digit avoidance).
//! * [`automaton`]: multi-track DFAs/NFAs over digit-tuple alphabets with the
//!   usual closure operations, JSON and DOT I/O.
//! * [`atoms`]: hand-built automata for `=`, `+`, `V_n` and constants.
//! * [`logic`]: formula AST, parser and the formula-to-automaton compiler.
//! * [`interp`]: interleaving, base squaring, digit embedding, the
//!   `BA_k`-in-`BA_l` planner and the pairing-function refuter.
//! * [`oracle`]: brute-force arithmetic semantics used to cross-check all of
//!   the above.
//! * [`cli`]: the `buchi` command-line front end.

pub mod atoms;
pub mod automaton;
pub mod cli;
mod error;
pub mod interp;
pub mod logic;
pub mod numeral;
pub mod oracle;

pub use automaton::{Dfa, DigitWord, Equivalence, Nfa, ProductMode, StateId};
pub use error::{Error, Result};
pub use numeral::{Base, Codec, DigitSeq, Natural};

//! Formulas of `BA_n` and their compilation into automata.

mod ast;
mod compile;
mod flatten;
mod parser;

pub use ast::{Formula, Term};
pub use compile::{compile, decide, satisfying_assignments};
pub use flatten::{flatten, is_flat};
pub use parser::parse;

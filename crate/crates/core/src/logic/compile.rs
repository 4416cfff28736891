use std::collections::BTreeSet;

use super::ast::{Formula, Term};
use super::flatten::flatten;
use crate::atoms::{add_automaton, const_automaton, eq_automaton, valuation_automaton};
use crate::automaton::{Dfa, ProductMode};
use crate::error::{Error, Result};
use crate::numeral::Base;

/// An automaton together with the variable read on each of its tracks.
struct Relation {
    dfa: Dfa,
    vars: Vec<String>,
}

impl Relation {
    /// Places an automaton whose tracks read `labels` (possibly repeated) onto
    /// the sorted distinct variables in `onto`.
    fn place(dfa: &Dfa, labels: &[String], onto: &[String]) -> Result<Dfa> {
        let source_of: Vec<usize> = labels
            .iter()
            .map(|l| onto.binary_search(l).expect("label among target variables"))
            .collect();
        dfa.remap_tracks(onto.len(), &source_of)
    }

    fn atom(dfa: Dfa, labels: &[&str]) -> Result<Relation> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let vars: Vec<String> = labels.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let dfa = Relation::place(&dfa, &labels, &vars)?.minimize();
        Ok(Relation { dfa, vars })
    }

    fn combine(self, other: Relation, mode: ProductMode) -> Result<Relation> {
        let vars: Vec<String> = self
            .vars
            .iter()
            .chain(&other.vars)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let left = Relation::place(&self.dfa, &self.vars, &vars)?;
        let right = Relation::place(&other.dfa, &other.vars, &vars)?;
        Ok(Relation { dfa: left.product(&right, mode)?.minimize(), vars })
    }

    fn negate(self) -> Relation {
        Relation { dfa: self.dfa.complement().minimize(), vars: self.vars }
    }

    fn exists(mut self, var: &str) -> Result<Relation> {
        if let Ok(at) = self.vars.binary_search_by(|v| v.as_str().cmp(var)) {
            self.dfa = self.dfa.project(at)?;
            self.vars.remove(at);
        }
        Ok(self)
    }
}

fn malformed(l: &Term, r: &Term) -> Error {
    Error::Malformed(format!("atom `{l} = {r}` is not flat"))
}

fn compile_flat(f: &Formula, base: Base) -> Result<Relation> {
    use Term::*;
    match f {
        Formula::Eq(l, r) => match (l, r) {
            (Var(x), Var(y)) => Relation::atom(eq_automaton(base), &[x, y]),
            (Var(x), Const(c)) => Relation::atom(const_automaton(base, c), &[x]),
            (Sum(a, b), Var(z)) => match (&**a, &**b) {
                (Var(x), Var(y)) => Relation::atom(add_automaton(base), &[x, y, z]),
                _ => Err(malformed(l, r)),
            },
            (Val(a), Var(y)) => match &**a {
                Var(x) => Relation::atom(valuation_automaton(base), &[x, y]),
                _ => Err(malformed(l, r)),
            },
            _ => Err(malformed(l, r)),
        },
        Formula::Not(g) => Ok(compile_flat(g, base)?.negate()),
        Formula::And(a, b) => compile_flat(a, base)?.combine(compile_flat(b, base)?, ProductMode::And),
        Formula::Or(a, b) => compile_flat(a, base)?.combine(compile_flat(b, base)?, ProductMode::Or),
        Formula::Implies(a, b) => {
            compile_flat(a, base)?.negate().combine(compile_flat(b, base)?, ProductMode::Or)
        }
        Formula::Iff(a, b) => {
            let (a, b) = (compile_flat(a, base)?, compile_flat(b, base)?);
            let both = Relation { dfa: a.dfa.clone(), vars: a.vars.clone() }
                .combine(Relation { dfa: b.dfa.clone(), vars: b.vars.clone() }, ProductMode::And)?;
            let neither = a.negate().combine(b.negate(), ProductMode::And)?;
            both.combine(neither, ProductMode::Or)
        }
        Formula::Exists(v, g) => compile_flat(g, base)?.exists(v),
        // A x f == !E x !f
        Formula::Forall(v, g) => Ok(compile_flat(g, base)?.negate().exists(v)?.negate()),
    }
}

/// Compiles a formula into a minimal automaton with one track per free
/// variable, tracks in ascending variable-name order.
pub fn compile(f: &Formula, base: Base) -> Result<Dfa> {
    let rel = compile_flat(&flatten(f), base)?;
    // a vacuous quantifier or a contradiction may drop variables from the
    // relation; cylindrify them back so the track layout matches free_vars()
    let vars = f.free_vars();
    if rel.vars == vars {
        return Ok(rel.dfa);
    }
    Ok(Relation::place(&rel.dfa, &rel.vars, &vars)?.minimize())
}

/// Truth of a sentence in `(ℕ, =, +, V_n)`.
pub fn decide(sentence: &Formula, base: Base) -> Result<bool> {
    let free = sentence.free_vars();
    if !free.is_empty() {
        return Err(Error::FreeVariables(free));
    }
    let dfa = compile(sentence, base)?;
    Ok(dfa.is_final(dfa.initial()))
}

/// Satisfying assignments with every value below `bound`, as tuples in
/// free-variable order.
pub fn satisfying_assignments(f: &Formula, base: Base, bound: u64) -> Result<BTreeSet<Vec<u64>>> {
    Ok(compile(f, base)?.enumerate_accepted(bound))
}

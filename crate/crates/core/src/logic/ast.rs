use std::collections::BTreeSet;
use std::fmt;

use crate::numeral::Natural;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Natural),
    Sum(Box<Term>, Box<Term>),
    /// `V_n(t)`, the largest power of the base dividing `t`.
    Val(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn constant(c: u64) -> Term {
        Term::Const(Natural::from(c))
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Box::new(a), Box::new(b))
    }

    pub fn val(t: Term) -> Term {
        Term::Val(Box::new(t))
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::Sum(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Val(t) => t.collect_vars(out),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Const(c) => write!(f, "{c}"),
            Term::Sum(a, b) => match **b {
                Term::Sum(..) => write!(f, "{a} + ({b})"),
                _ => write!(f, "{a} + {b}"),
            },
            Term::Val(t) => write!(f, "V({t})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn exists(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Exists(v.into(), Box::new(f))
    }

    pub fn forall(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Forall(v.into(), Box::new(f))
    }

    /// Free variables in ascending name order; this is also the track order
    /// of compiled automata.
    pub fn free_vars(&self) -> Vec<String> {
        fn go(f: &Formula, out: &mut BTreeSet<String>) {
            match f {
                Formula::Eq(a, b) => {
                    out.extend(a.vars());
                    out.extend(b.vars());
                }
                Formula::Not(g) => go(g, out),
                Formula::And(a, b)
                | Formula::Or(a, b)
                | Formula::Implies(a, b)
                | Formula::Iff(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                Formula::Exists(v, g) | Formula::Forall(v, g) => {
                    let mut inner = BTreeSet::new();
                    go(g, &mut inner);
                    inner.remove(v);
                    out.extend(inner);
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut out);
        out.into_iter().collect()
    }

    /// Every variable name occurring anywhere, bound or free.
    pub(crate) fn all_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) => {
                out.extend(a.vars());
                out.extend(b.vars());
            }
            Formula::Not(g) => g.all_names(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.all_names(out);
                b.all_names(out);
            }
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                out.insert(v.clone());
                g.all_names(out);
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::Not(g) => write!(f, "!({g})"),
            Formula::And(a, b) => write!(f, "({} & {})", Operand(a), Operand(b)),
            Formula::Or(a, b) => write!(f, "({} | {})", Operand(a), Operand(b)),
            Formula::Implies(a, b) => write!(f, "({} -> {})", Operand(a), Operand(b)),
            Formula::Iff(a, b) => write!(f, "({} <-> {})", Operand(a), Operand(b)),
            Formula::Exists(v, g) => write!(f, "E {v} ({g})"),
            Formula::Forall(v, g) => write!(f, "A {v} ({g})"),
        }
    }
}

/// Quantifier bodies extend to the right, so quantified operands of a binary
/// connective need their own parentheses.
struct Operand<'a>(&'a Formula);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Formula::Exists(..) | Formula::Forall(..) => write!(f, "({})", self.0),
            other => write!(f, "{other}"),
        }
    }
}

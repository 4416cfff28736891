use std::collections::BTreeSet;

use super::ast::{Formula, Term};

/// Rewrites every atom into one of `x = y`, `x + y = z`, `V(x) = y` or
/// `x = c` over variables, naming compound subterms with fresh existentially
/// quantified variables `_tN`.
pub fn flatten(f: &Formula) -> Formula {
    let mut names = BTreeSet::new();
    f.all_names(&mut names);
    let next = names
        .iter()
        .filter_map(|n| n.strip_prefix("_t").and_then(|k| k.parse::<usize>().ok()))
        .map(|k| k + 1)
        .max()
        .unwrap_or(0);
    Flattener { next }.formula(f)
}

/// Whether `f` consists only of the four atom shapes produced by [`flatten`].
pub fn is_flat(f: &Formula) -> bool {
    match f {
        Formula::Eq(l, r) => atom_shape(l, r),
        Formula::Not(g) | Formula::Exists(_, g) | Formula::Forall(_, g) => is_flat(g),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
            is_flat(a) && is_flat(b)
        }
    }
}

fn atom_shape(l: &Term, r: &Term) -> bool {
    use Term::*;
    match (l, r) {
        (Var(_), Var(_)) | (Var(_), Const(_)) => true,
        (Sum(a, b), Var(_)) => matches!((&**a, &**b), (Var(_), Var(_))),
        (Val(a), Var(_)) => matches!(**a, Var(_)),
        _ => false,
    }
}

struct Flattener {
    next: usize,
}

impl Flattener {
    fn fresh(&mut self) -> String {
        let name = format!("_t{}", self.next);
        self.next += 1;
        name
    }

    fn formula(&mut self, f: &Formula) -> Formula {
        match f {
            Formula::Eq(l, r) => self.equation(l, r),
            Formula::Not(g) => Formula::not(self.formula(g)),
            Formula::And(a, b) => Formula::and(self.formula(a), self.formula(b)),
            Formula::Or(a, b) => Formula::or(self.formula(a), self.formula(b)),
            Formula::Implies(a, b) => Formula::implies(self.formula(a), self.formula(b)),
            Formula::Iff(a, b) => Formula::iff(self.formula(a), self.formula(b)),
            Formula::Exists(v, g) => Formula::exists(v.clone(), self.formula(g)),
            Formula::Forall(v, g) => Formula::forall(v.clone(), self.formula(g)),
        }
    }

    /// Names `t` by a variable, pushing the defining atoms.
    fn name(&mut self, t: &Term, defs: &mut Vec<(String, Formula)>) -> String {
        match t {
            Term::Var(v) => v.clone(),
            _ => {
                let v = self.fresh();
                let atom = self.shaped(t, &v, defs);
                defs.push((v.clone(), atom));
                v
            }
        }
    }

    /// The atom `t = v` for a compound or constant `t`.
    fn shaped(&mut self, t: &Term, v: &str, defs: &mut Vec<(String, Formula)>) -> Formula {
        let var = || Term::var(v);
        match t {
            Term::Var(x) => Formula::eq(Term::var(x.clone()), var()),
            Term::Const(c) => Formula::eq(var(), Term::Const(c.clone())),
            Term::Sum(a, b) => {
                let x = self.name(a, defs);
                let y = self.name(b, defs);
                Formula::eq(Term::sum(Term::var(x), Term::var(y)), var())
            }
            Term::Val(a) => {
                let x = self.name(a, defs);
                Formula::eq(Term::val(Term::var(x)), var())
            }
        }
    }

    fn equation(&mut self, l: &Term, r: &Term) -> Formula {
        let mut defs = Vec::new();
        let atom = match (l, r) {
            (_, Term::Var(v)) => self.shaped(l, v, &mut defs),
            (Term::Var(v), _) => self.shaped(r, v, &mut defs),
            _ => {
                let v = self.name(r, &mut defs);
                self.shaped(l, &v, &mut defs)
            }
        };
        // innermost definitions were pushed first; wrap so each fresh
        // variable scopes over everything that mentions it
        let mut body = atom;
        for (_, def) in defs.iter().rev() {
            body = Formula::and(def.clone(), body);
        }
        for (v, _) in defs.iter().rev() {
            body = Formula::exists(v.clone(), body);
        }
        body
    }
}

//! Brute-force semantics of `(ℕ, =, +, V_n)`.
//!
//! Values are plain machine integers and evaluation is direct recursion, so
//! nothing here depends on the automata it is used to check (apart from
//! running them on inputs).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::interp::Interpretation;
use crate::logic::{Formula, Term};
use crate::numeral::{to_digits, Base, Codec, Natural};

/// The largest power of `base` dividing `x`; `0` for `x = 0`.
pub fn v_of(x: u128, base: Base) -> u128 {
    if x == 0 {
        return 0;
    }
    let n = base.radix() as u128;
    let mut p = 1;
    while x.is_multiple_of(p * n) {
        p *= n;
    }
    p
}

enum CTerm {
    Slot(usize),
    Const(u128),
    Sum(Box<CTerm>, Box<CTerm>),
    Val(Box<CTerm>),
}

enum CForm {
    Eq(CTerm, CTerm),
    Not(Box<CForm>),
    And(Box<CForm>, Box<CForm>),
    Or(Box<CForm>, Box<CForm>),
    Implies(Box<CForm>, Box<CForm>),
    Iff(Box<CForm>, Box<CForm>),
    Exists(usize, Box<CForm>),
    Forall(usize, Box<CForm>),
}

struct Resolver {
    scope: Vec<(String, usize)>,
    slots: usize,
}

impl Resolver {
    fn term(&self, t: &Term) -> Result<CTerm> {
        Ok(match t {
            Term::Var(v) => CTerm::Slot(
                self.scope
                    .iter()
                    .rev()
                    .find(|(name, _)| name == v)
                    .map(|&(_, s)| s)
                    .ok_or_else(|| Error::Unassigned(v.clone()))?,
            ),
            Term::Const(c) => CTerm::Const(
                c.to_u64().ok_or_else(|| Error::Malformed(format!("constant {c} exceeds the oracle's range")))?
                    as u128,
            ),
            Term::Sum(a, b) => CTerm::Sum(Box::new(self.term(a)?), Box::new(self.term(b)?)),
            Term::Val(a) => CTerm::Val(Box::new(self.term(a)?)),
        })
    }

    fn formula(&mut self, f: &Formula) -> Result<CForm> {
        let pair = |r: &mut Self, a: &Formula, b: &Formula| -> Result<(Box<CForm>, Box<CForm>)> {
            Ok((Box::new(r.formula(a)?), Box::new(r.formula(b)?)))
        };
        Ok(match f {
            Formula::Eq(a, b) => CForm::Eq(self.term(a)?, self.term(b)?),
            Formula::Not(g) => CForm::Not(Box::new(self.formula(g)?)),
            Formula::And(a, b) => {
                let (a, b) = pair(self, a, b)?;
                CForm::And(a, b)
            }
            Formula::Or(a, b) => {
                let (a, b) = pair(self, a, b)?;
                CForm::Or(a, b)
            }
            Formula::Implies(a, b) => {
                let (a, b) = pair(self, a, b)?;
                CForm::Implies(a, b)
            }
            Formula::Iff(a, b) => {
                let (a, b) = pair(self, a, b)?;
                CForm::Iff(a, b)
            }
            Formula::Exists(v, g) | Formula::Forall(v, g) => {
                let slot = self.slots;
                self.slots += 1;
                self.scope.push((v.clone(), slot));
                let body = Box::new(self.formula(g)?);
                self.scope.pop();
                if matches!(f, Formula::Exists(..)) {
                    CForm::Exists(slot, body)
                } else {
                    CForm::Forall(slot, body)
                }
            }
        })
    }
}

struct Evaluator {
    radix: Base,
    bound: u128,
    env: Vec<u128>,
}

impl Evaluator {
    fn term(&self, t: &CTerm) -> u128 {
        match t {
            CTerm::Slot(s) => self.env[*s],
            CTerm::Const(c) => *c,
            CTerm::Sum(a, b) => self.term(a) + self.term(b),
            CTerm::Val(a) => v_of(self.term(a), self.radix),
        }
    }

    fn holds(&mut self, f: &CForm) -> bool {
        match f {
            CForm::Eq(a, b) => self.term(a) == self.term(b),
            CForm::Not(g) => !self.holds(g),
            CForm::And(a, b) => self.holds(a) && self.holds(b),
            CForm::Or(a, b) => self.holds(a) || self.holds(b),
            CForm::Implies(a, b) => !self.holds(a) || self.holds(b),
            CForm::Iff(a, b) => self.holds(a) == self.holds(b),
            CForm::Exists(s, g) => (0..=self.bound).any(|v| {
                self.env[*s] = v;
                self.holds(g)
            }),
            CForm::Forall(s, g) => (0..=self.bound).all(|v| {
                self.env[*s] = v;
                self.holds(g)
            }),
        }
    }
}

/// A formula prepared for repeated bounded evaluation.
pub struct Evaluation {
    form: CForm,
    free: Vec<String>,
    eval: Evaluator,
}

impl Evaluation {
    /// Quantifiers range over `[0, quantifier_bound]`.
    pub fn new(f: &Formula, base: Base, quantifier_bound: u64) -> Result<Evaluation> {
        let free = f.free_vars();
        let mut r = Resolver { scope: Vec::new(), slots: free.len() };
        for (i, v) in free.iter().enumerate() {
            r.scope.push((v.clone(), i));
        }
        let form = r.formula(f)?;
        let eval = Evaluator { radix: base, bound: quantifier_bound as u128, env: vec![0; r.slots] };
        Ok(Evaluation { form, free, eval })
    }

    /// Free variables in ascending order; the order of [`Evaluation::holds`]'s
    /// argument.
    pub fn free_vars(&self) -> &[String] {
        &self.free
    }

    pub fn holds(&mut self, values: &[u64]) -> bool {
        assert_eq!(values.len(), self.free.len(), "one value per free variable");
        for (slot, &v) in self.eval.env.iter_mut().zip(values) {
            *slot = v as u128;
        }
        self.eval.holds(&self.form)
    }
}

/// Truth of `f` under `assignment`, quantifiers ranging over
/// `[0, quantifier_bound]`.
pub fn eval(f: &Formula, assignment: &BTreeMap<String, u64>, base: Base, quantifier_bound: u64) -> Result<bool> {
    let mut e = Evaluation::new(f, base, quantifier_bound)?;
    let values = e
        .free_vars()
        .iter()
        .map(|v| assignment.get(v).copied().ok_or_else(|| Error::Unassigned(v.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(e.holds(&values))
}

/// All assignments of the free variables below `bound` satisfying `f`, in
/// free-variable order.
pub fn satisfying_table(f: &Formula, base: Base, bound: u64, quantifier_bound: u64) -> Result<BTreeSet<Vec<u64>>> {
    let mut e = Evaluation::new(f, base, quantifier_bound)?;
    let arity = e.free_vars().len();
    Ok(relation_table(|xs| e.holds(xs), arity, bound))
}

/// Every `arity`-tuple with components below `bound` satisfying `pred`.
pub fn relation_table(mut pred: impl FnMut(&[u64]) -> bool, arity: usize, bound: u64) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    if bound == 0 && arity > 0 {
        return out;
    }
    let mut xs = vec![0u64; arity];
    loop {
        if pred(&xs) {
            out.insert(xs.clone());
        }
        let mut i = arity;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            xs[i] += 1;
            if xs[i] < bound {
                break;
            }
            xs[i] = 0;
        }
    }
}

/// The relations of the signature, plus the domain predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Domain,
    Equality,
    Addition,
    Valuation,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::Domain, Relation::Equality, Relation::Addition, Relation::Valuation];

    pub fn arity(self) -> usize {
        match self {
            Relation::Domain => 1,
            Relation::Equality | Relation::Valuation => 2,
            Relation::Addition => 3,
        }
    }

    pub fn holds(self, xs: &[u128], base: Base) -> bool {
        match self {
            Relation::Domain => true,
            Relation::Equality => xs[0] == xs[1],
            Relation::Addition => xs[0] + xs[1] == xs[2],
            Relation::Valuation => v_of(xs[0], base) == xs[1],
        }
    }

    /// `xs` holds `arity` elements of `m` components each, element-major;
    /// the relation must hold in every component.
    pub fn holds_componentwise(self, xs: &[u128], m: usize, base: Base) -> bool {
        let mut column = [0u128; 3];
        (0..m).all(|c| {
            for j in 0..self.arity() {
                column[j] = xs[m * j + c];
            }
            self.holds(&column[..self.arity()], base)
        })
    }

    /// The last argument as a function of the others; `None` for the domain.
    fn apply(self, xs: &[u128], base: Base) -> Option<u128> {
        match self {
            Relation::Domain => None,
            Relation::Equality => Some(xs[0]),
            Relation::Addition => Some(xs[0] + xs[1]),
            Relation::Valuation => Some(v_of(xs[0], base)),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::Domain => "domain",
            Relation::Equality => "equality",
            Relation::Addition => "addition",
            Relation::Valuation => "valuation",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A tuple on which an automaton disagrees with the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub relation: Relation,
    /// The automaton's input, one natural per track.
    pub target: Vec<Natural>,
    /// Whether the automaton accepted it.
    pub accepted: bool,
    pub note: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verb = if self.accepted { "accepts" } else { "rejects" };
        let tuple: Vec<String> = self.target.iter().map(|y| y.to_string()).collect();
        write!(f, "{}: automaton {verb} ({})", self.relation, tuple.join(", "))?;
        if !self.note.is_empty() {
            write!(f, "; {}", self.note)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Report {
    Pass { checked: u64 },
    Fail(Counterexample),
}

impl Report {
    pub fn is_pass(&self) -> bool {
        matches!(self, Report::Pass { .. })
    }

    /// Sums pass counts; the first failure wins.
    pub fn and(self, other: impl FnOnce() -> Result<Report>) -> Result<Report> {
        match self {
            Report::Fail(_) => Ok(self),
            Report::Pass { checked } => Ok(match other()? {
                Report::Pass { checked: more } => Report::Pass { checked: checked + more },
                fail => fail,
            }),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Pass { checked } => write!(f, "pass ({checked} tuples)"),
            Report::Fail(c) => write!(f, "fail: {c}"),
        }
    }
}

fn target_base(dfa: &Dfa, codec: &Codec) -> Result<Base> {
    codec.validate()?;
    match codec.target_base() {
        Some(b) if b != dfa.base() => Err(Error::BaseMismatch { expected: dfa.base().radix(), found: b.radix() }),
        _ => Ok(dfa.base()),
    }
}

fn source_base(dfa: &Dfa, codec: &Codec) -> Base {
    codec.source_base().unwrap_or(dfa.base())
}

fn check_arity(dfa: &Dfa, relation: Relation) -> Result<()> {
    if dfa.tracks() != relation.arity() {
        return Err(Error::ArityMismatch { expected: relation.arity(), found: dfa.tracks() });
    }
    Ok(())
}

fn small(x: &Natural) -> Result<u128> {
    x.to_u128().ok_or_else(|| Error::Malformed(format!("{x} exceeds the oracle's range")))
}

/// A target value, its digits and the source element it decodes to.
type Member = (u64, Vec<u32>, Vec<u128>);

/// Codec members below `bound`.
fn members(codec: &Codec, base: Base, bound: u64) -> Result<Vec<Member>> {
    let mut out = Vec::new();
    for y in 0..bound {
        let n = Natural::from(y);
        if let Some(xs) = codec.invert(&n) {
            let xs = xs.iter().map(small).collect::<Result<Vec<_>>>()?;
            out.push((y, to_digits(&n, base).into_digits(), xs));
        }
    }
    Ok(out)
}

fn radix_digits(mut x: u128, radix: u32) -> Vec<u32> {
    let mut out = Vec::new();
    while x > 0 {
        out.push((x % radix as u128) as u32);
        x /= radix as u128;
    }
    out
}

fn leaves<'a>(codec: &'a Codec, out: &mut Vec<&'a Codec>) {
    match codec {
        Codec::Compose(parts) => parts.iter().for_each(|p| leaves(p, out)),
        leaf => out.push(leaf),
    }
}

/// Target-base digits (LSD first, no trailing zeros) of the encoding of one
/// source element, computed digit by digit.
fn encode(codec: &Codec, base: Base, xs: &[u128]) -> Vec<u32> {
    let mut parts = Vec::new();
    leaves(codec, &mut parts);
    let mut digits = match parts.first() {
        None => radix_digits(xs[0], base.radix()),
        Some(Codec::Interleave { m, base }) => {
            let seqs: Vec<Vec<u32>> = xs.iter().map(|&x| radix_digits(x, base.radix())).collect();
            let width = seqs.iter().map(Vec::len).max().unwrap_or(0);
            let mut out = vec![0; width * m];
            for (c, seq) in seqs.iter().enumerate() {
                for (l, &d) in seq.iter().enumerate() {
                    out[m * l + c] = d;
                }
            }
            out
        }
        Some(Codec::PairGroup { k }) => radix_digits(xs[0], k.radix() * k.radix()),
        Some(Codec::DigitAvoid { k }) => radix_digits(xs[0], k.radix()),
        Some(Codec::Compose(_)) => unreachable!("flattened"),
    };
    for part in &parts {
        // digit strings pass through interleaving of one component and
        // through rereading; grouping splits every digit in two
        if let Codec::PairGroup { k } = part {
            digits = digits.iter().flat_map(|&d| [d / k.radix(), d % k.radix()]).collect();
        }
    }
    while digits.last() == Some(&0) {
        digits.pop();
    }
    digits
}

fn tuple_note(elements: &[&[u128]]) -> String {
    let parts: Vec<String> = elements
        .iter()
        .map(|e| {
            let inner: Vec<String> = e.iter().map(|x| x.to_string()).collect();
            format!("({})", inner.join(", "))
        })
        .collect();
    format!("decodes to {}", parts.join(" "))
}

/// Source side: every tuple of source elements with components below
/// `bound` is accepted after encoding iff the relation holds.
pub fn check_source(dfa: &Dfa, relation: Relation, codec: &Codec, bound: u64) -> Result<Report> {
    check_arity(dfa, relation)?;
    let tb = target_base(dfa, codec)?;
    let sb = source_base(dfa, codec);
    let m = codec.source_arity();
    let r = relation.arity();
    // all m-tuples below bound, lexicographic
    let elements: Vec<Vec<u128>> = relation_table(|_| true, m, bound)
        .into_iter()
        .map(|e| e.into_iter().map(u128::from).collect())
        .collect();
    let encoded: Vec<Vec<u32>> = elements.iter().map(|e| encode(codec, tb, e)).collect();
    let count = elements.len();
    let total = count.checked_pow(r as u32).ok_or_else(|| Error::Malformed("bound too large".into()))?;
    let fail = (0..total).into_par_iter().find_map_first(|idx| {
        let mut picks = [0usize; 3];
        let mut rest = idx;
        for j in (0..r).rev() {
            picks[j] = rest % count;
            rest /= count;
        }
        let digits: Vec<&[u32]> = picks[..r].iter().map(|&p| encoded[p].as_slice()).collect();
        let flat: Vec<u128> = picks[..r].iter().flat_map(|&p| elements[p].iter().copied()).collect();
        let expected = relation.holds_componentwise(&flat, m, sb);
        let accepted = dfa.accepts_digits(&digits);
        (accepted != expected).then(|| {
            let parts: Vec<&[u128]> = picks[..r].iter().map(|&p| elements[p].as_slice()).collect();
            Counterexample {
                relation,
                target: digits.iter().map(|d| crate::numeral::from_digits(d, tb).expect("valid digits")).collect(),
                accepted,
                note: tuple_note(&parts),
            }
        })
    });
    Ok(match fail {
        Some(c) => Report::Fail(c),
        None => Report::Pass { checked: total as u64 },
    })
}

/// Target side: every tuple of codec members below `bound` is accepted iff
/// its decoding satisfies the relation.
pub fn check_target(dfa: &Dfa, relation: Relation, codec: &Codec, bound: u64) -> Result<Report> {
    check_arity(dfa, relation)?;
    let tb = target_base(dfa, codec)?;
    let sb = source_base(dfa, codec);
    let m = codec.source_arity();
    let r = relation.arity();
    let members = members(codec, tb, bound)?;
    let count = members.len();
    let total = count.checked_pow(r as u32).ok_or_else(|| Error::Malformed("bound too large".into()))?;
    let fail = (0..total).into_par_iter().find_map_first(|idx| {
        let mut picks = [0usize; 3];
        let mut rest = idx;
        for j in (0..r).rev() {
            picks[j] = rest % count;
            rest /= count;
        }
        let digits: Vec<&[u32]> = picks[..r].iter().map(|&p| members[p].1.as_slice()).collect();
        let flat: Vec<u128> = picks[..r].iter().flat_map(|&p| members[p].2.iter().copied()).collect();
        let expected = relation.holds_componentwise(&flat, m, sb);
        let accepted = dfa.accepts_digits(&digits);
        (accepted != expected).then(|| {
            let parts: Vec<&[u128]> = picks[..r].iter().map(|&p| members[p].2.as_slice()).collect();
            Counterexample {
                relation,
                target: picks[..r].iter().map(|&p| Natural::from(members[p].0)).collect(),
                accepted,
                note: tuple_note(&parts),
            }
        })
    });
    Ok(match fail {
        Some(c) => Report::Fail(c),
        None => Report::Pass { checked: total as u64 },
    })
}

/// Both sides of the correspondence between `dfa` and `relation` through
/// `codec`.
pub fn check_correspondence(dfa: &Dfa, relation: Relation, codec: &Codec, bound: u64) -> Result<Report> {
    check_source(dfa, relation, codec, bound)?.and(|| check_target(dfa, relation, codec, bound))
}

/// A one-track automaton accepts exactly the codec's image below `bound`.
pub fn check_domain(dfa: &Dfa, codec: &Codec, bound: u64) -> Result<Report> {
    check_arity(dfa, Relation::Domain)?;
    target_base(dfa, codec)?;
    for y in 0..bound {
        let n = Natural::from(y);
        let expected = codec.contains(&n);
        let accepted = dfa.accepts_tuple(std::slice::from_ref(&n))?;
        if accepted != expected {
            let note = if expected { "member of the codec's image" } else { "outside the codec's image" };
            return Ok(Report::Fail(Counterexample {
                relation: Relation::Domain,
                target: vec![n],
                accepted,
                note: note.into(),
            }));
        }
    }
    Ok(Report::Pass { checked: bound })
}

/// For relations whose last argument is a function of the others: for every
/// tuple of codec members below `bound` on the input tracks, the accepted
/// member values on the last track (up to `slack` digits longer than the
/// longer of the inputs and the expected output) are exactly the encoded
/// function value.
pub fn check_function_graph(dfa: &Dfa, relation: Relation, codec: &Codec, bound: u64, slack: usize) -> Result<Report> {
    check_arity(dfa, relation)?;
    if relation == Relation::Domain {
        return Err(Error::Malformed("the domain is not a function graph".into()));
    }
    let tb = target_base(dfa, codec)?;
    let sb = source_base(dfa, codec);
    let m = codec.source_arity();
    let inputs = relation.arity() - 1;
    let members = members(codec, tb, bound)?;
    let count = members.len();
    let total = count.checked_pow(inputs as u32).ok_or_else(|| Error::Malformed("bound too large".into()))?;
    let picks_of = |idx: usize| {
        let mut picks = [0usize; 2];
        let mut rest = idx;
        for j in (0..inputs).rev() {
            picks[j] = rest % count;
            rest /= count;
        }
        picks
    };
    let result_of = |picks: &[usize]| -> Vec<u128> {
        (0..m)
            .map(|c| {
                let mut column = [0u128; 2];
                for (slot, &p) in column.iter_mut().zip(picks) {
                    *slot = members[p].2[c];
                }
                relation.apply(&column[..picks.len()], sb).expect("function relation")
            })
            .collect()
    };
    let live = dfa.live_states();
    let fail = (0..total).into_par_iter().find_map_first(|idx| {
        let picks = picks_of(idx);
        let picks = &picks[..inputs];
        let result = result_of(picks);
        let expected = &encode(codec, tb, &result);
        let fixed: Vec<&[u32]> = picks.iter().map(|&p| members[p].1.as_slice()).collect();
        let longest = fixed.iter().map(|f| f.len()).max().unwrap_or(0).max(expected.len());
        let found = dfa.completions(&fixed, longest + slack, &live);
        let target = |last: &[u32]| -> Vec<Natural> {
            picks
                .iter()
                .map(|&p| Natural::from(members[p].0))
                .chain(std::iter::once(crate::numeral::from_digits(last, tb).expect("valid digits")))
                .collect()
        };
        let mut parts: Vec<&[u128]> = picks.iter().map(|&p| members[p].2.as_slice()).collect();
        let wrong = found.iter().filter(|w| *w != expected).find_map(|w| {
            codec.invert(&crate::numeral::from_digits(w, tb).expect("valid digits")).map(|xs| (w, xs))
        });
        if let Some((wrong, xs)) = wrong {
            let decoded: Vec<u128> = xs.iter().map(|x| x.to_u128().unwrap_or(u128::MAX)).collect();
            parts.push(&decoded);
            return Some(Counterexample {
                relation,
                target: target(wrong),
                accepted: true,
                note: tuple_note(&parts),
            });
        }
        if !found.contains(expected) {
            parts.push(&result);
            return Some(Counterexample {
                relation,
                target: target(expected),
                accepted: false,
                note: tuple_note(&parts),
            });
        }
        None
    });
    Ok(match fail {
        Some(c) => Report::Fail(c),
        None => Report::Pass { checked: total as u64 },
    })
}

/// Correspondence of all four automata of an interpretation, with the
/// domain compared exactly against the codec's image.
pub fn check_interpretation(interp: &Interpretation, bound: u64) -> Result<Report> {
    interp.validate()?;
    let codec = &interp.codec;
    check_domain(&interp.domain, codec, bound)?
        .and(|| check_correspondence(&interp.domain, Relation::Domain, codec, bound))?
        .and(|| check_correspondence(&interp.equality, Relation::Equality, codec, bound))?
        .and(|| check_correspondence(&interp.addition, Relation::Addition, codec, bound))?
        .and(|| check_correspondence(&interp.valuation, Relation::Valuation, codec, bound))
}

/// Axioms of the internal model on the domain elements below `bound`:
/// equality is an equivalence, addition and valuation are total functions.
/// Outputs are searched up to `slack` digits beyond the inputs.
pub fn check_internal_model(interp: &Interpretation, bound: u64, slack: usize) -> Result<Report> {
    interp.validate()?;
    let base = interp.target_base;
    let domain: Vec<Vec<u32>> = interp
        .domain
        .enumerate_accepted(bound)
        .into_iter()
        .map(|v| to_digits(&Natural::from(v[0]), base).into_digits())
        .collect();
    let in_domain = |w: &[u32]| interp.domain.accepts_digits(&[w]);
    let value = |w: &[u32]| crate::numeral::from_digits(w, base).expect("valid digits");
    let fail = |relation, target: Vec<&[u32]>, accepted, note: &str| {
        Report::Fail(Counterexample {
            relation,
            target: target.into_iter().map(value).collect(),
            accepted,
            note: note.into(),
        })
    };
    let longest = domain.iter().map(Vec::len).max().unwrap_or(0) + slack;

    // equality classes, restricted to the domain
    let eq_live = interp.equality.live_states();
    let classes: Vec<BTreeSet<Vec<u32>>> = domain
        .par_iter()
        .map(|a| {
            interp
                .equality
                .completions(&[a.as_slice()], longest, &eq_live)
                .into_iter()
                .filter(|w| in_domain(w))
                .collect()
        })
        .collect();
    let index: BTreeMap<&[u32], usize> = domain.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    for (i, a) in domain.iter().enumerate() {
        if !classes[i].contains(a) {
            return Ok(fail(Relation::Equality, vec![a, a], false, "not reflexive"));
        }
        for b in &classes[i] {
            let Some(&j) = index.get(b.as_slice()) else { continue };
            if !classes[j].contains(a) {
                return Ok(fail(Relation::Equality, vec![b, a], false, "not symmetric"));
            }
            if let Some(c) = classes[j].iter().find(|c| index.contains_key(c.as_slice()) && !classes[i].contains(*c)) {
                return Ok(fail(Relation::Equality, vec![a, c], false, "not transitive"));
            }
        }
    }

    let unique = |dfa: &Dfa, live: &[bool], fixed: &[&[u32]], relation| -> Option<Report> {
        let len = fixed.iter().map(|f| f.len()).max().unwrap_or(0) + slack;
        let outs: Vec<Vec<u32>> = dfa.completions(fixed, len, live).into_iter().filter(|w| in_domain(w)).collect();
        match outs.len() {
            1 => None,
            0 => Some(fail(relation, fixed.to_vec(), false, "no result in the domain")),
            _ => {
                let mut t = fixed.to_vec();
                t.push(&outs[1]);
                Some(fail(relation, t, true, "second result in the domain"))
            }
        }
    };
    let val_live = interp.valuation.live_states();
    if let Some(r) = domain.iter().find_map(|a| unique(&interp.valuation, &val_live, &[a], Relation::Valuation)) {
        return Ok(r);
    }
    let add_live = interp.addition.live_states();
    let n = domain.len();
    let found = (0..n * n).into_par_iter().find_map_first(|idx| {
        unique(&interp.addition, &add_live, &[&domain[idx / n], &domain[idx % n]], Relation::Addition)
    });
    Ok(found.unwrap_or(Report::Pass { checked: (n + n + n * n) as u64 }))
}

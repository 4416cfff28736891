use std::fmt;

use serde::{Deserialize, Serialize};

use super::transforms::{base_square_transform, digit_embed_transform, domain_automaton_avoiding, interleave_transform};
use crate::atoms::{add_automaton, eq_automaton, full_domain, valuation_automaton};
use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::numeral::{Base, Codec};

/// One link in a chain of interpretations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PlanStep {
    /// `BA_k` in `BA_{k+1}`.
    Embed { k: Base },
    /// `BA_{k²}` in `BA_k`.
    Square { k: Base },
}

impl PlanStep {
    pub fn source(self) -> Base {
        match self {
            PlanStep::Embed { k } => k,
            PlanStep::Square { k } => k.squared().expect("validated plan"),
        }
    }

    pub fn target(self) -> Base {
        match self {
            PlanStep::Embed { k } => k.succ().expect("validated plan"),
            PlanStep::Square { k } => k,
        }
    }

    fn codec(self) -> Codec {
        match self {
            PlanStep::Embed { k } => Codec::DigitAvoid { k },
            PlanStep::Square { k } => Codec::PairGroup { k },
        }
    }
}

impl fmt::Display for PlanStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verb = match self {
            PlanStep::Embed { .. } => "embed",
            PlanStep::Square { .. } => "square",
        };
        write!(f, "{verb} {}→{}", self.source(), self.target())
    }
}

/// Renders a plan as `embed 3→4; square 4→2`, or `identity` when empty.
pub fn format_plan(plan: &[PlanStep]) -> String {
    if plan.is_empty() {
        return "identity".into();
    }
    plan.iter().map(PlanStep::to_string).collect::<Vec<_>>().join("; ")
}

/// Embeds `k` upwards to `l^(2^p)` for the least `p` with `l^(2^p) ≥ k`,
/// then squares back down to `l`.
pub fn plan_interpretation(k: Base, l: Base) -> Result<Vec<PlanStep>> {
    if k == l {
        return Ok(Vec::new());
    }
    let mut towers = vec![l.radix() as u64];
    while *towers.last().unwrap() < k.radix() as u64 {
        let top = *towers.last().unwrap();
        towers.push(top * top);
    }
    let top = *towers.last().unwrap();
    let mut steps: Vec<PlanStep> = (k.radix() as u64..top)
        .map(|j| PlanStep::Embed { k: Base::new(j as u32).expect("j ≥ k ≥ 2") })
        .collect();
    for &below in towers[..towers.len() - 1].iter().rev() {
        steps.push(PlanStep::Square { k: Base::new(below as u32).expect("below ≥ l ≥ 2") });
    }
    for step in &steps {
        if let PlanStep::Embed { k } = step {
            k.succ()?;
        }
    }
    Ok(steps)
}

/// One-dimensional interpretation of a (possibly multi-dimensional) source
/// structure in a Büchi arithmetic, given by concrete automata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interpretation {
    pub source_base: Base,
    pub target_base: Base,
    /// Naturals per source element; the codec's source arity.
    pub dimension: usize,
    pub domain: Dfa,
    pub equality: Dfa,
    pub addition: Dfa,
    pub valuation: Dfa,
    pub codec: Codec,
    #[serde(default)]
    pub plan: Vec<PlanStep>,
}

impl Interpretation {
    /// The four automata with their names, in bundle order.
    pub fn automata(&self) -> [(&'static str, &Dfa); 4] {
        [
            ("domain", &self.domain),
            ("equality", &self.equality),
            ("addition", &self.addition),
            ("valuation", &self.valuation),
        ]
    }

    /// Shape checks: bases, track counts, codec consistency, nonempty domain.
    pub fn validate(&self) -> Result<()> {
        for (name, (dfa, tracks)) in ["domain", "equality", "addition", "valuation"].iter().zip([
            (&self.domain, 1),
            (&self.equality, 2),
            (&self.addition, 3),
            (&self.valuation, 2),
        ]) {
            dfa.validate()?;
            if dfa.base() != self.target_base {
                return Err(Error::Malformed(format!("{name} automaton is over base {}", dfa.base())));
            }
            if dfa.tracks() != tracks {
                return Err(Error::Malformed(format!("{name} automaton has {} tracks", dfa.tracks())));
            }
        }
        self.codec.validate()?;
        if self.codec.source_arity() != self.dimension {
            return Err(Error::Malformed("codec arity differs from the dimension".into()));
        }
        let (src, tgt) = match (self.codec.source_base(), self.codec.target_base()) {
            (Some(s), Some(t)) => (s, t),
            _ => (self.target_base, self.target_base),
        };
        if src != self.source_base || tgt != self.target_base {
            return Err(Error::Malformed("codec bases differ from the interpretation".into()));
        }
        if self.domain.is_empty() {
            return Err(Error::Malformed("empty domain".into()));
        }
        Ok(())
    }
}

/// Interprets `BA_k` in `BA_l` by running the plan's transforms over the
/// atoms of `BA_k` and the full domain.
pub fn build_interpretation(k: Base, l: Base) -> Result<Interpretation> {
    let plan = plan_interpretation(k, l)?;
    let mut domain = full_domain(k);
    let mut relations = [eq_automaton(k), add_automaton(k), valuation_automaton(k)].map(|d| d.minimize());
    for step in &plan {
        match *step {
            PlanStep::Embed { k: j } => {
                for rel in relations.iter_mut() {
                    *rel = digit_embed_transform(rel)?.minimize();
                }
                domain = digit_embed_transform(&domain)?
                    .intersect(&domain_automaton_avoiding(j)?)?
                    .minimize();
            }
            PlanStep::Square { .. } => {
                for rel in relations.iter_mut().chain(std::iter::once(&mut domain)) {
                    *rel = base_square_transform(rel)?.close_padding().minimize();
                }
            }
        }
    }
    let [equality, addition, valuation] = relations;
    let interp = Interpretation {
        source_base: k,
        target_base: l,
        dimension: 1,
        domain,
        equality,
        addition,
        valuation,
        codec: Codec::Compose(plan.iter().map(|s| s.codec()).collect()),
        plan,
    };
    interp.validate()?;
    Ok(interp)
}

/// An `m`-dimensional interpretation in `BA_n`: relation automata over
/// `m·r` tracks, grouped by argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    pub base: Base,
    pub dimension: usize,
    pub domain: Dfa,
    pub equality: Dfa,
    pub addition: Dfa,
    pub valuation: Dfa,
}

/// `(ℕ^m, =, +, V_n)` with every relation acting componentwise.
pub fn identity_family(base: Base, m: usize) -> Result<Family> {
    if m == 0 {
        return Err(Error::Malformed("dimension must be positive".into()));
    }
    let lift = |atom: Dfa, r: usize| -> Result<Dfa> {
        let mut acc = Dfa::universal(base, m * r)?;
        for c in 0..m {
            let source_of: Vec<usize> = (0..r).map(|j| m * j + c).collect();
            acc = acc.intersect(&atom.remap_tracks(m * r, &source_of)?)?.minimize();
        }
        Ok(acc)
    };
    Ok(Family {
        base,
        dimension: m,
        domain: Dfa::universal(base, m)?,
        equality: lift(eq_automaton(base), 2)?,
        addition: lift(add_automaton(base), 3)?,
        valuation: lift(valuation_automaton(base), 2)?,
    })
}

/// Interleaves every member of an `m`-dimensional family into a
/// one-dimensional interpretation with codec `Interleave { m, base }`.
pub fn one_dimensionalize(family: &Family) -> Result<Interpretation> {
    let m = family.dimension;
    let one = |d: &Dfa, r: usize| -> Result<Dfa> {
        if d.base() != family.base {
            return Err(Error::BaseMismatch { expected: family.base.radix(), found: d.base().radix() });
        }
        Ok(interleave_transform(d, m, r)?.close_padding().minimize())
    };
    let interp = Interpretation {
        source_base: family.base,
        target_base: family.base,
        dimension: m,
        domain: one(&family.domain, 1)?,
        equality: one(&family.equality, 2)?,
        addition: one(&family.addition, 3)?,
        valuation: one(&family.valuation, 2)?,
        codec: Codec::Interleave { m, base: family.base },
        plan: Vec::new(),
    };
    interp.validate()?;
    Ok(interp)
}

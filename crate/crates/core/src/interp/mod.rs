//! Interpretations of `BA_k` and of multi-dimensional structures in `BA_l`.

mod plan;
mod refute;
mod transforms;

pub use plan::{
    build_interpretation, format_plan, identity_family, one_dimensionalize, plan_interpretation, Family,
    Interpretation, PlanStep,
};
pub use refute::{in_pairing_language, refute_pairing, RefutationWitness, WitnessKind};
pub use transforms::{base_square_transform, digit_embed_transform, domain_automaton_avoiding, interleave_transform};

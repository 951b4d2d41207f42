//! Finite propositional language: vocabulary, formulas, worlds and classical entailment.

mod formula;
mod parser;
mod worlds;

pub(crate) use formula::models_in;
pub use formula::{
    dedup_formulas, entails, is_consistent, is_tautology, models, models_of_all, push_unique, satisfied_sentences,
    Formula, FormulaDisplay,
};
pub use parser::{identifiers, parse_formula};
pub use worlds::{Vocabulary, World, WorldSet, DEFAULT_MAX_VARS, HARD_MAX_VARS};

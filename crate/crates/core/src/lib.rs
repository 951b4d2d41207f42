//! Lexicographic closure of propositional default bases, computed two ways:
//! directly from maximal consistent subsets, and by iterated revision of
//! epistemic entrenchment relations by sets of sentences.
//!
//! Worlds over `n` variables are the integers `0..2^n`; bit `i` of a world
//! is the truth value of variable `i`.

pub mod defaults;
pub mod entrenchment;
mod error;
pub mod gen;
pub mod klm;
pub mod logic;
pub mod ranked;
mod report;
pub mod revision;
pub mod verify;

pub use defaults::{
    conjecture_check, entrenchment_from_set, lex_infers_direct, lex_sequence, parse_kb, rational_closure_infers,
    z_partition, DefaultBase, LexClosure, ZPartition,
};
pub use entrenchment::{check_e_axioms, entrenchment_from_consequence, EntrenchmentOrder, EntrenchmentRelation};
pub use error::{Error, Result};
pub use logic::{entails, is_consistent, models, parse_formula, Formula, Vocabulary, World, WorldSet};
pub use ranked::{Coverage, Rank, RankedSequence};
pub use report::{CheckReport, Violation};
pub use revision::{
    check_revision_postulates, evaluate_chain, revise_by_set, revise_entrenchment, revise_sequence, RevisionChain,
};
pub use verify::{run_suite, Suite, SuiteReport};

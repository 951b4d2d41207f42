//! Default bases, their specificity strata, and the consequence relations
//! built from them.

mod base;
mod closure;
mod conjecture;
mod kb;
mod lex;
mod sentences;
mod zpartition;

pub use base::{Default, DefaultBase, DefaultDisplay, DEFAULT_MAX_DEFAULTS, HARD_MAX_DEFAULTS};
pub use closure::{
    lex_chain, lex_sequence, lex_sequence_with, rational_closure_infers, rational_closure_sequence, stratum_materials,
};
pub use conjecture::{
    conjecture_check, conjunction_chain, literal_queries, sorted_conjunction, theta_chain, theta_materials,
    ConjectureReport, Divergence,
};
pub use kb::{parse_default, parse_kb, parse_kb_with, parse_vars_line, KbLimits};
pub use lex::{
    lex_infers_direct, lex_less, lex_maximal_bases, maximal_bases, LexClosure, LexOrder, Subset, SubsetOrder,
};
pub use sentences::{cardinality_strictly_prec, entrenchment_from_set, inclusion_strictly_prec, sentence_sequence};
pub use zpartition::{tolerates, z_partition, ZPartition};

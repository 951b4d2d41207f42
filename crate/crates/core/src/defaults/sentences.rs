//! Entrenchment relations generated from finite sets of sentences.
//!
//! A consistent set `E` with `|E| = k` ranks worlds by how many members of
//! `E` they violate: layer `i` holds the worlds satisfying exactly `k - i`
//! members. An inconsistent set yields the absurd relation.

use crate::entrenchment::EntrenchmentRelation;
use crate::logic::{dedup_formulas, models, Formula, Vocabulary, WorldSet};
use crate::ranked::RankedSequence;

/// `U^E` before canonicalization: `k + 1` layers, or `k + 1` empty layers if `E ⊨ ⊥`.
pub fn sentence_sequence(set: &[Formula], vocab: &Vocabulary) -> RankedSequence {
    let set = dedup_formulas(set.iter().cloned());
    let width = vocab.world_count();
    let k = set.len();
    let sets: Vec<WorldSet> = set.iter().map(|f| models(f, vocab)).collect();
    let mut layers = vec![WorldSet::empty(width); k + 1];
    let consistent = !sets
        .iter()
        .fold(WorldSet::full(width), |acc, s| acc.intersection(s))
        .is_empty();
    if consistent {
        for w in vocab.worlds() {
            let satisfied = sets.iter().filter(|s| s.contains(w)).count();
            layers[k - satisfied].insert(w);
        }
    }
    RankedSequence::from_layers_unchecked(width, layers)
}

/// `⪯_E` by cardinality of satisfied members.
pub fn entrenchment_from_set(set: &[Formula], vocab: &Vocabulary) -> EntrenchmentRelation {
    EntrenchmentRelation::from_canonical(sentence_sequence(set, vocab).canonicalize())
}

/// `⋂` of member models for every subset of `set`, indexed by bitmask.
fn subset_models(sets: &[WorldSet], width: usize) -> Vec<WorldSet> {
    let mut out = vec![WorldSet::full(width)];
    for mask in 1usize..(1 << sets.len()) {
        let low = mask.trailing_zeros() as usize;
        let next = out[mask & (mask - 1)].intersection(&sets[low]);
        out.push(next);
    }
    out
}

struct SubsetTable {
    consistent_set: bool,
    by_mask: Vec<WorldSet>,
}

impl SubsetTable {
    fn new(set: &[Formula], vocab: &Vocabulary) -> Self {
        let set = dedup_formulas(set.iter().cloned());
        let sets: Vec<WorldSet> = set.iter().map(|f| models(f, vocab)).collect();
        let by_mask = subset_models(&sets, vocab.world_count());
        let consistent_set = !by_mask.last().expect("at least the empty subset").is_empty();
        Self {
            consistent_set,
            by_mask,
        }
    }

    /// Masks of subsets `E'` with `E' ∪ {¬χ}` consistent.
    fn consistent_with_negation(&self, chi: &WorldSet) -> Vec<usize> {
        let neg = chi.complement();
        (0..self.by_mask.len())
            .filter(|&m| self.by_mask[m].intersects(&neg))
            .collect()
    }
}

/// Strict part of `⪯_E` in quantifier form: `E` consistent, `θ` not a
/// tautology, and every `E' ⊆ E` consistent with `¬φ` is outnumbered by
/// some `E'' ⊆ E` consistent with `¬θ`.
///
/// Enumerates subsets directly; independent of [`entrenchment_from_set`].
pub fn cardinality_strictly_prec(set: &[Formula], theta: &Formula, phi: &Formula, vocab: &Vocabulary) -> bool {
    let table = SubsetTable::new(set, vocab);
    let theta_set = models(theta, vocab);
    if !table.consistent_set || theta_set.is_full() {
        return false;
    }
    let for_phi = table.consistent_with_negation(&models(phi, vocab));
    let for_theta = table.consistent_with_negation(&theta_set);
    for_phi
        .iter()
        .all(|&e1| for_theta.iter().any(|&e2| e1.count_ones() < e2.count_ones()))
}

/// Inclusion-based strict entrenchment: as [`cardinality_strictly_prec`]
/// but `E''` must strictly include `E'`.
pub fn inclusion_strictly_prec(set: &[Formula], theta: &Formula, phi: &Formula, vocab: &Vocabulary) -> bool {
    let table = SubsetTable::new(set, vocab);
    let theta_set = models(theta, vocab);
    if !table.consistent_set || theta_set.is_full() {
        return false;
    }
    let for_phi = table.consistent_with_negation(&models(phi, vocab));
    let for_theta = table.consistent_with_negation(&theta_set);
    for_phi
        .iter()
        .all(|&e1| for_theta.iter().any(|&e2| e2 != e1 && e2 & e1 == e1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entrenchment::EntrenchmentOrder;
    use crate::logic::parse_formula;

    fn pq() -> Vocabulary {
        Vocabulary::new(["p", "q"]).unwrap()
    }

    fn f(v: &Vocabulary, s: &str) -> Formula {
        parse_formula(s, v).unwrap()
    }

    #[test]
    fn empty_set_gives_uniform() {
        let v = pq();
        assert_eq!(entrenchment_from_set(&[], &v), EntrenchmentRelation::initial(&v));
    }

    #[test]
    fn inconsistent_set_is_absurd() {
        let v = pq();
        let r = entrenchment_from_set(&[f(&v, "p"), f(&v, "!p")], &v);
        assert!(r.is_absurd());
        let raw = sentence_sequence(&[f(&v, "p"), f(&v, "!p")], &v);
        assert_eq!(raw.layers().len(), 3);
        assert!(raw.is_empty());
    }

    #[test]
    fn counts_satisfied_members() {
        let v = pq();
        let r = entrenchment_from_set(&[f(&v, "p"), f(&v, "q")], &v);
        assert_eq!(
            r.carrier(),
            &RankedSequence::from_indices(4, &[&[3], &[1, 2], &[0]]).unwrap()
        );
    }

    #[test]
    fn syntax_sensitive() {
        // Same consequences, different relations.
        let v = pq();
        let a = entrenchment_from_set(&[f(&v, "p & q")], &v);
        let b = entrenchment_from_set(&[f(&v, "p"), f(&v, "q")], &v);
        assert_ne!(a, b);
        assert!(a.belief_holds(&f(&v, "p")) && b.belief_holds(&f(&v, "p")));
    }

    #[test]
    fn quantifier_forms() {
        let v = pq();
        let e = [f(&v, "p"), f(&v, "q")];
        assert!(inclusion_strictly_prec(&e, &f(&v, "p"), &f(&v, "p | q"), &v));
        assert!(cardinality_strictly_prec(&e, &f(&v, "p"), &f(&v, "p | q"), &v));
        assert!(!cardinality_strictly_prec(&e, &f(&v, "p"), &f(&v, "q"), &v));
        let bad = [f(&v, "p"), f(&v, "!p")];
        assert!(!inclusion_strictly_prec(&bad, &f(&v, "p"), &f(&v, "true"), &v));
        assert!(!cardinality_strictly_prec(&e, &f(&v, "p | !p"), &f(&v, "true"), &v));
        let r = entrenchment_from_set(&e, &v);
        assert!(r.strictly_less(&f(&v, "p"), &f(&v, "p | q")));
    }
}

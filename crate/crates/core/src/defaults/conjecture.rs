//! Compares the conjunction-chain relation with rational closure.
//!
//! With `Θ_i = Δ_i ∪ … ∪ Δ_n` for `i = 0…n`, revising `⪯_∅` by the sets
//! `Θ_i→` reproduces the lexicographic closure. Revising instead by the
//! single sentences `⋀Θ_i→` is conjectured to give rational closure; this
//! module measures agreement rather than assuming it.

use super::base::DefaultBase;
use super::closure::{lex_chain, rational_closure_sequence};
use super::sentences::sentence_sequence;
use super::zpartition::{z_partition, ZPartition};
use crate::error::Result;
use crate::logic::{Formula, Vocabulary};
use crate::ranked::RankedSequence;
use crate::revision::{evaluate_chain, RevisionChain};

/// `Θ_i→` for `i = 0…n`: materials of strata `i` and above, lowest stratum first.
pub fn theta_materials(base: &DefaultBase, zp: &ZPartition) -> Vec<Vec<Formula>> {
    (0..zp.len())
        .map(|i| {
            zp.strata()[i..]
                .iter()
                .flatten()
                .map(|&d| base.defaults()[d].material())
                .collect()
        })
        .collect()
}

/// Conjunction of `items`, conjuncts sorted by their rendering.
pub fn sorted_conjunction(items: &[Formula], vocab: &Vocabulary) -> Formula {
    let mut keyed: Vec<(String, &Formula)> = items.iter().map(|f| (f.display(vocab).to_string(), f)).collect();
    keyed.sort();
    Formula::conjunction(keyed.into_iter().map(|(_, f)| f.clone()))
}

pub fn theta_chain(base: &DefaultBase, zp: &ZPartition) -> RevisionChain {
    let vocab = base.vocab();
    let mut chain = RevisionChain::new(vocab.world_count());
    for theta in theta_materials(base, zp) {
        chain.push(sentence_sequence(&theta, vocab));
    }
    chain
}

pub fn conjunction_chain(base: &DefaultBase, zp: &ZPartition) -> RevisionChain {
    let vocab = base.vocab();
    let mut chain = RevisionChain::new(vocab.world_count());
    for theta in theta_materials(base, zp) {
        chain.push(sentence_sequence(&[sorted_conjunction(&theta, vocab)], vocab));
    }
    chain
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub theta: Formula,
    pub phi: Formula,
    pub conjunction_chain: bool,
    pub rational_closure: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub queries: usize,
    pub agreements: usize,
    pub divergences: Vec<Divergence>,
    /// Whether the `Θ_i→` chain equals the `Δ_i→` chain as entrenchment relations.
    pub theta_rewrite_holds: bool,
    pub conjunction_sequence: RankedSequence,
    pub rational_sequence: RankedSequence,
}

impl ConjectureReport {
    pub fn full_agreement(&self) -> bool {
        self.divergences.is_empty()
    }

    /// Whether the two sequences induce the same relation on all queries, not just the sample.
    pub fn sequences_equivalent(&self) -> bool {
        self.conjunction_sequence.equivalent(&self.rational_sequence)
    }
}

pub fn conjecture_check(base: &DefaultBase, queries: &[(Formula, Formula)]) -> Result<ConjectureReport> {
    let zp = z_partition(base)?;
    let conjunction_sequence = evaluate_chain(&conjunction_chain(base, &zp))?;
    let rational_sequence = rational_closure_sequence(base, &zp);
    let theta_rewrite_holds = evaluate_chain(&theta_chain(base, &zp))? == evaluate_chain(&lex_chain(base, &zp))?;

    let mut agreements = 0;
    let mut divergences = Vec::new();
    for (theta, phi) in queries {
        let by_chain = conjunction_sequence.infers(theta, phi);
        let by_rc = rational_sequence.infers(theta, phi);
        if by_chain == by_rc {
            agreements += 1;
        } else {
            divergences.push(Divergence {
                theta: theta.clone(),
                phi: phi.clone(),
                conjunction_chain: by_chain,
                rational_closure: by_rc,
            });
        }
    }
    Ok(ConjectureReport {
        queries: queries.len(),
        agreements,
        divergences,
        theta_rewrite_holds,
        conjunction_sequence,
        rational_sequence,
    })
}

/// Every `(l₁, l₂)` over the `2n` literals.
pub fn literal_queries(vocab: &Vocabulary) -> Vec<(Formula, Formula)> {
    let literals: Vec<Formula> = (0..vocab.len())
        .flat_map(|i| [Formula::var(i), Formula::not(Formula::var(i))])
        .collect();
    literals
        .iter()
        .flat_map(|a| literals.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::kb::parse_kb;

    #[test]
    fn empty_base_agrees_trivially() {
        let base = parse_kb("vars: a, b").unwrap();
        let report = conjecture_check(&base, &literal_queries(base.vocab())).unwrap();
        assert!(report.full_agreement());
        assert!(report.theta_rewrite_holds);
        assert_eq!(report.agreements, 16);
    }

    #[test]
    fn single_default_all_constructions_coincide() {
        let base = parse_kb("vars: b, f\ndefault: b => f").unwrap();
        let zp = z_partition(&base).unwrap();
        let conj = evaluate_chain(&conjunction_chain(&base, &zp)).unwrap();
        let sets = evaluate_chain(&theta_chain(&base, &zp)).unwrap();
        let lex = evaluate_chain(&lex_chain(&base, &zp)).unwrap();
        assert_eq!(conj, sets);
        assert_eq!(sets, lex);
        assert_eq!(conj.layers().len(), 2);
        let report = conjecture_check(&base, &literal_queries(base.vocab())).unwrap();
        assert!(report.full_agreement());
        assert!(report.sequences_equivalent());
    }

    #[test]
    fn penguin_report_is_produced() {
        let base = parse_kb("vars: b, f, p\ndefault: b => f\ndefault: p => b\ndefault: p => !f").unwrap();
        let queries = literal_queries(base.vocab());
        let report = conjecture_check(&base, &queries).unwrap();
        assert_eq!(report.queries, 36);
        assert_eq!(report.agreements + report.divergences.len(), 36);
        assert!(report.theta_rewrite_holds);
    }

    #[test]
    fn conjunct_order_does_not_change_sequence() {
        let base = parse_kb("vars: b, f, p\ndefault: p => b\ndefault: p => !f").unwrap();
        let v = base.vocab();
        let materials = base.materials();
        let forward = sentence_sequence(&[Formula::conjunction(materials.iter().cloned())], v);
        let backward = sentence_sequence(&[Formula::conjunction(materials.iter().rev().cloned())], v);
        assert_eq!(forward, backward);
        assert_eq!(
            sorted_conjunction(&materials, v).display(v).to_string(),
            "(p -> !f) & (p -> b)"
        );
    }
}

//! Revision of one entrenchment relation by another.
//!
//! On carriers, `U * V` intersects every prior layer with every input layer,
//! ordering the results with the input rank as the major key and the prior
//! rank as the minor key. A non-full (empty) prior is replaced by the input.

use crate::defaults::entrenchment_from_set;
use crate::entrenchment::{base_sample, check_e_axioms, EntrenchmentOrder, EntrenchmentRelation};
use crate::error::{Error, Result};
use crate::logic::{dedup_formulas, models, Formula, Vocabulary, WorldSet};
use crate::ranked::{Rank, RankedSequence};
use crate::report::CheckReport;

/// `U * V`, canonicalized. Both inputs must be full or empty.
pub fn revise_sequence(prior: &RankedSequence, input: &RankedSequence) -> Result<RankedSequence> {
    if prior.width() != input.width() {
        return Err(Error::WidthMismatch(prior.width(), input.width()));
    }
    prior.require_upsilon()?;
    input.require_upsilon()?;
    if !prior.is_full() {
        return Ok(input.canonicalize());
    }
    let mut layers = Vec::with_capacity(prior.layers().len() * input.layers().len());
    for v in input.layers() {
        for u in prior.layers() {
            let cell = u.intersection(v);
            if !cell.is_empty() {
                layers.push(cell);
            }
        }
    }
    Ok(RankedSequence::from_layers_unchecked(prior.width(), layers))
}

/// `⪯_K * ⪯_E`, computed on carriers.
pub fn revise_entrenchment(prior: &EntrenchmentRelation, input: &EntrenchmentRelation) -> EntrenchmentRelation {
    let carrier = revise_sequence(prior.carrier(), input.carrier())
        .expect("entrenchment carriers are full or empty over one vocabulary");
    EntrenchmentRelation::from_canonical(carrier)
}

/// `⪯ * E`: revise by the relation generated from the sentence set `E`.
pub fn revise_by_set(prior: &EntrenchmentRelation, set: &[Formula], vocab: &Vocabulary) -> EntrenchmentRelation {
    revise_entrenchment(prior, &entrenchment_from_set(set, vocab))
}

/// `initial * steps[0] * … * steps[n-1]`, folded from the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RevisionChain {
    pub initial: RankedSequence,
    pub steps: Vec<RankedSequence>,
}

impl RevisionChain {
    /// A chain starting from `(W)`.
    pub fn new(width: usize) -> Self {
        Self {
            initial: RankedSequence::uniform(width),
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, step: RankedSequence) -> &mut Self {
        self.steps.push(step);
        self
    }

    pub fn evaluate(&self) -> Result<RankedSequence> {
        evaluate_chain(self)
    }
}

fn fold_right(chain: &RevisionChain) -> Result<RankedSequence> {
    let mut steps = chain.steps.iter().rev();
    let Some(last) = steps.next() else {
        return Ok(chain.initial.canonicalize());
    };
    let mut acc = last.canonicalize();
    for step in steps {
        acc = revise_sequence(step, &acc)?;
    }
    revise_sequence(&chain.initial, &acc)
}

/// Left fold of [`revise_sequence`] over the chain.
///
/// Debug builds also fold from the right and assert both bracketings agree
/// whenever every step but the last is non-empty.
pub fn evaluate_chain(chain: &RevisionChain) -> Result<RankedSequence> {
    let mut acc = chain.initial.canonicalize();
    chain.initial.require_upsilon()?;
    for step in &chain.steps {
        acc = revise_sequence(&acc, step)?;
    }
    if cfg!(debug_assertions) {
        let bracket_free = chain.steps.len() < 2 || chain.steps[..chain.steps.len() - 1].iter().all(|s| !s.is_empty());
        if bracket_free {
            debug_assert_eq!(fold_right(chain)?, acc, "revision chain is bracket dependent");
        }
    }
    Ok(acc)
}

/// `λ ⪯_K χ ⟺ λ ⪯_E χ` for every `λ`, given `S_χ`.
///
/// `λ ⪯ χ` depends only on `S_¬λ`, and for a non-absurd relation holds iff
/// some world of `S_¬λ` ranks at or below `rank(¬χ)`. Agreement on the empty
/// set and on every singleton therefore decides agreement on every set.
fn agree_on_all_lambda(prior: &EntrenchmentRelation, input: &EntrenchmentRelation, chi: &WorldSet) -> bool {
    let width = chi.width();
    let neg_chi = chi.complement();
    let threshold = |r: &EntrenchmentRelation| r.carrier().rank_of_set(&neg_chi);
    let (tk, te) = (threshold(prior), threshold(input));
    let holds = |r: &EntrenchmentRelation, t: Rank, rank: Rank| r.is_absurd() || rank <= t;
    if holds(prior, tk, Rank::Infinite) != holds(input, te, Rank::Infinite) {
        return false;
    }
    (0..width).all(|w| {
        let w = crate::logic::World(w);
        holds(prior, tk, prior.carrier().world_rank(w)) == holds(input, te, input.carrier().world_rank(w))
    })
}

/// Every `Y ⊇ base`, enumerated by the free worlds.
fn supersets(base: WorldSet) -> impl Iterator<Item = WorldSet> {
    let free: Vec<_> = base.complement().iter().collect();
    (0u64..(1u64 << free.len())).map(move |mask| {
        let mut set = base.clone();
        for (i, w) in free.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                set.insert(*w);
            }
        }
        set
    })
}

/// Antecedent of the third postulate for the pair `(θ, φ)`: equal input
/// entrenchment, and for every `χ` with `θ ∧ φ ⊨ χ` and `θ ≺_E χ`, the prior
/// and input agree on every `λ ⪯ χ`.
///
/// `λ` and `χ` range over the whole language (up to equivalence), not a sample.
fn third_postulate_applies(
    prior: &EntrenchmentRelation,
    input: &EntrenchmentRelation,
    theta: &WorldSet,
    phi: &WorldSet,
) -> bool {
    if !(input.leq_sets(theta, phi) && input.leq_sets(phi, theta)) {
        return false;
    }
    let both = theta.intersection(phi);
    supersets(both)
        .filter(|chi| input.leq_sets(theta, chi) && !input.leq_sets(chi, theta))
        .all(|chi| agree_on_all_lambda(prior, input, &chi))
}

/// Checks, for `⪯_{K*E}`:
/// 1. it is an entrenchment relation;
/// 2. `θ ≺_E φ ⇒ θ ≺_{K*E} φ`;
/// 3. if `θ` and `φ` are equally entrenched in `E` and the antecedent on
///    `λ, χ` holds, then `θ ⪯_{K*E} φ ⟺ θ ⪯_K φ`.
///
/// `θ` and `φ` range over `sample` extended with [`base_sample`]. The third
/// postulate is only checked for a non-absurd input: when `E` is absurd its
/// antecedent is vacuous while `K * E` is absurd, so it cannot hold for any
/// non-absurd `K`.
pub fn check_revision_postulates(
    prior: &EntrenchmentRelation,
    input: &EntrenchmentRelation,
    sample: &[Formula],
    vocab: &Vocabulary,
) -> CheckReport {
    let revised = revise_entrenchment(prior, input);
    let mut report = check_e_axioms(&revised, sample, vocab);
    if let Some(violation) = &mut report.violation {
        violation.law = "E1* result is an E-relation";
        return report;
    }
    let sample = dedup_formulas(base_sample(vocab).into_iter().chain(sample.iter().cloned()));
    let sets: Vec<WorldSet> = sample.iter().map(|f| models(f, vocab)).collect();
    for (i, theta) in sample.iter().enumerate() {
        for (j, phi) in sample.iter().enumerate() {
            let witness = || vec![theta.clone(), phi.clone()];
            if input.strictly_less(theta, phi) {
                report.check(
                    "E2* input strictness preserved",
                    revised.strictly_less(theta, phi),
                    witness,
                );
            }
            if !input.is_absurd() && third_postulate_applies(prior, input, &sets[i], &sets[j]) {
                let holds = revised.leq(theta, phi) == prior.leq(theta, phi);
                report.check("E3* prior order kept on input ties", holds, witness);
            }
            if report.violation.is_some() {
                return report;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    fn bfp() -> Vocabulary {
        Vocabulary::new(["b", "f", "p"]).unwrap()
    }

    fn penguin_chain() -> RankedSequence {
        RankedSequence::from_indices(8, &[&[0, 2, 3], &[1, 5], &[4, 7], &[6]]).unwrap()
    }

    fn bird_layer() -> RankedSequence {
        RankedSequence::from_indices(8, &[&[0, 2, 3, 4, 6, 7], &[1, 5]]).unwrap()
    }

    fn penguin_layer() -> RankedSequence {
        RankedSequence::from_indices(8, &[&[0, 1, 2, 3, 5], &[4, 7], &[6]]).unwrap()
    }

    #[test]
    fn uniform_prior_yields_input() {
        let v = penguin_layer().with_empty_layer(1);
        assert_eq!(
            revise_sequence(&RankedSequence::uniform(8), &v).unwrap(),
            v.canonicalize()
        );
    }

    #[test]
    fn empty_prior_yields_input() {
        let v = penguin_layer();
        assert_eq!(revise_sequence(&RankedSequence::empty(8), &v).unwrap(), v);
        let absurd_padded = RankedSequence::new(8, vec![WorldSet::empty(8)]).unwrap();
        assert_eq!(revise_sequence(&absurd_padded, &v).unwrap(), v);
    }

    #[test]
    fn input_major_ordering_gives_penguin_chain() {
        assert_eq!(
            revise_sequence(&bird_layer(), &penguin_layer()).unwrap(),
            penguin_chain()
        );
    }

    #[test]
    fn partial_inputs_rejected() {
        let partial = RankedSequence::from_indices(8, &[&[0]]).unwrap();
        assert_eq!(revise_sequence(&partial, &penguin_layer()), Err(Error::PartialSequence));
        assert_eq!(revise_sequence(&penguin_layer(), &partial), Err(Error::PartialSequence));
        let chain = RevisionChain {
            initial: RankedSequence::uniform(8),
            steps: vec![partial],
        };
        assert_eq!(evaluate_chain(&chain), Err(Error::PartialSequence));
    }

    #[test]
    fn entrenchment_level_examples() {
        let v = bfp();
        let absurd = EntrenchmentRelation::absurd(&v);
        let e = EntrenchmentRelation::from_sequence(&penguin_layer()).unwrap();
        assert_eq!(revise_entrenchment(&absurd, &e), e);
        assert!(revise_entrenchment(&e, &absurd).is_absurd());

        let bird = parse_formula("b -> f", &v).unwrap();
        let k0 = EntrenchmentRelation::initial(&v);
        let r = revise_entrenchment(&k0, &entrenchment_from_set(std::slice::from_ref(&bird), &v));
        let s = models(&bird, &v);
        assert_eq!(r.carrier().layers(), &[s.clone(), s.complement()]);
    }

    #[test]
    fn set_revision_examples() {
        let v = bfp();
        let k0 = EntrenchmentRelation::initial(&v);
        assert_eq!(revise_by_set(&k0, &[], &v), k0);
        let p = parse_formula("p", &v).unwrap();
        assert!(revise_by_set(&k0, &[p.clone(), Formula::not(p)], &v).is_absurd());
        let f = |s: &str| parse_formula(s, &v).unwrap();
        let step1 = revise_by_set(&k0, &[f("b -> f")], &v);
        let step2 = revise_by_set(&step1, &[f("p -> b"), f("p -> !f")], &v);
        assert_eq!(step2.carrier(), &penguin_chain());
    }

    #[test]
    fn chain_examples() {
        assert_eq!(RevisionChain::new(8).evaluate().unwrap(), RankedSequence::uniform(8));
        let mut chain = RevisionChain::new(8);
        chain.push(bird_layer()).push(penguin_layer());
        assert_eq!(chain.evaluate().unwrap(), penguin_chain());
        let right = revise_sequence(
            &RankedSequence::uniform(8),
            &revise_sequence(&bird_layer(), &penguin_layer()).unwrap(),
        )
        .unwrap();
        assert_eq!(right, penguin_chain());

        let mut with_empty = RevisionChain::new(8);
        with_empty.push(RankedSequence::empty(8)).push(penguin_layer());
        assert_eq!(with_empty.evaluate().unwrap(), penguin_layer());
    }

    #[test]
    fn postulates_hold_on_penguin_steps() {
        let v = bfp();
        let k = EntrenchmentRelation::from_sequence(&bird_layer()).unwrap();
        let e = EntrenchmentRelation::from_sequence(&penguin_layer()).unwrap();
        let report = check_revision_postulates(&k, &e, &[], &v);
        assert!(report.passed(), "{:?}", report.violation.map(|x| x.render(&v)));
    }

    #[test]
    fn input_strictness_flips_prior_belief() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let p = parse_formula("p", &v).unwrap();
        let not_p = Formula::not(p.clone());
        let k = entrenchment_from_set(std::slice::from_ref(&p), &v);
        let e = entrenchment_from_set(std::slice::from_ref(&not_p), &v);
        assert!(k.strictly_less(&not_p, &p));
        assert!(e.strictly_less(&p, &not_p));
        let r = revise_entrenchment(&k, &e);
        assert!(r.strictly_less(&p, &not_p));
        assert!(check_revision_postulates(&k, &e, &[], &v).passed());
    }

    #[test]
    fn absurd_input_has_no_strict_pairs() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let e = EntrenchmentRelation::absurd(&v);
        for a in base_sample(&v) {
            for b in base_sample(&v) {
                assert!(!e.strictly_less(&a, &b));
            }
        }
    }

    #[test]
    fn third_postulate_fails_literally_for_absurd_input() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        // K believes q only, so q ⪯_K p fails while K * E is absurd.
        let k = entrenchment_from_set(&[Formula::var(1)], &v);
        let e = EntrenchmentRelation::absurd(&v);
        let (p, q) = (models(&Formula::var(0), &v), models(&Formula::var(1), &v));
        assert!(third_postulate_applies(&k, &e, &q, &p));
        let r = revise_entrenchment(&k, &e);
        assert!(r.leq_sets(&q, &p) && !k.leq_sets(&q, &p));
        assert!(check_revision_postulates(&k, &e, &[], &v).passed());
    }

    #[test]
    fn lambda_reduction_matches_enumeration() {
        // Brute force over every λ (all 16 model sets on two variables).
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let relations = [
            EntrenchmentRelation::initial(&v),
            EntrenchmentRelation::absurd(&v),
            EntrenchmentRelation::from_sequence(&RankedSequence::from_indices(4, &[&[3], &[1, 2], &[0]]).unwrap())
                .unwrap(),
            EntrenchmentRelation::from_sequence(&RankedSequence::from_indices(4, &[&[1], &[0, 2, 3]]).unwrap())
                .unwrap(),
        ];
        let all: Vec<WorldSet> = (0u32..16)
            .map(|m| WorldSet::from_worlds(4, (0..4).filter(|i| (m >> i) & 1 == 1)))
            .collect();
        for k in &relations {
            for e in &relations {
                for chi in &all {
                    let brute = all
                        .iter()
                        .all(|lambda| k.leq_sets(lambda, chi) == e.leq_sets(lambda, chi));
                    assert_eq!(agree_on_all_lambda(k, e, chi), brute);
                }
            }
        }
    }
}

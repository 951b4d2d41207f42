//! Epistemic entrenchment relations.
//!
//! Every entrenchment relation is represented by a canonical carrier
//! sequence that is full or empty. `θ ⪯ φ` ("φ is at least as entrenched
//! as θ") holds iff `rank(¬θ) ≤ rank(¬φ)` on the carrier, and always when
//! the carrier is empty (the absurd relation).

use crate::error::Result;
use crate::logic::{dedup_formulas, models, models_in, Formula, Vocabulary, WorldSet};
use crate::ranked::{Rank, RankedSequence};
use crate::report::CheckReport;

/// A binary relation on formulas that claims to be an entrenchment relation.
pub trait EntrenchmentOrder {
    /// `θ ⪯ φ`.
    fn leq(&self, theta: &Formula, phi: &Formula) -> bool;

    /// `θ ≺ φ`: `θ ⪯ φ` and not `φ ⪯ θ`.
    fn strictly_less(&self, theta: &Formula, phi: &Formula) -> bool {
        self.leq(theta, phi) && !self.leq(phi, theta)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EntrenchmentRelation {
    carrier: RankedSequence,
}

impl EntrenchmentRelation {
    /// `⪯_U`, built from the consequence relation of a full or empty `U`.
    ///
    /// Partial sequences are rejected.
    pub fn from_sequence(sequence: &RankedSequence) -> Result<Self> {
        sequence.require_upsilon()?;
        Ok(Self {
            carrier: sequence.canonicalize(),
        })
    }

    /// The relation in which only tautologies are believed, carrier `(W)`.
    pub fn initial(vocab: &Vocabulary) -> Self {
        Self {
            carrier: RankedSequence::uniform(vocab.world_count()),
        }
    }

    pub fn absurd(vocab: &Vocabulary) -> Self {
        Self {
            carrier: RankedSequence::empty(vocab.world_count()),
        }
    }

    pub(crate) fn from_canonical(carrier: RankedSequence) -> Self {
        debug_assert!(carrier.in_upsilon() && carrier.is_canonical());
        Self { carrier }
    }

    pub fn carrier(&self) -> &RankedSequence {
        &self.carrier
    }

    pub fn width(&self) -> usize {
        self.carrier.width()
    }

    pub fn is_absurd(&self) -> bool {
        self.carrier.layers().is_empty()
    }

    fn neg_rank(&self, theta: &Formula) -> Rank {
        self.carrier.rank_of_set(&models_in(theta, self.width()).complement())
    }

    /// `θ ⪯ φ` given `S_θ` and `S_φ`.
    pub fn leq_sets(&self, theta: &WorldSet, phi: &WorldSet) -> bool {
        self.is_absurd() || self.carrier.rank_of_set(&theta.complement()) <= self.carrier.rank_of_set(&phi.complement())
    }

    /// Literal reading of the conversion from `|~`:
    /// `θ ⪯ φ` iff `¬θ ∨ ¬φ |≁ θ` or `¬φ |~ ⊥`.
    pub fn leq_literal(&self, theta: &Formula, phi: &Formula) -> bool {
        let not_theta = Formula::not(theta.clone());
        let not_phi = Formula::not(phi.clone());
        !self.carrier.infers(&Formula::or(not_theta, not_phi.clone()), theta)
            || self.carrier.infers(&not_phi, &Formula::Bottom)
    }

    /// `θ ∈ Bel(⪯)`: everything when absurd, else the first carrier layer lies inside `S_θ`.
    pub fn belief_holds(&self, theta: &Formula) -> bool {
        self.belief_holds_set(&models_in(theta, self.width()))
    }

    pub fn belief_holds_set(&self, theta: &WorldSet) -> bool {
        match self.carrier.layers().first() {
            None => true,
            Some(first) => first.is_subset(theta),
        }
    }

    /// Worlds of the first carrier layer; empty for the absurd relation.
    pub fn most_plausible(&self) -> WorldSet {
        self.carrier
            .layers()
            .first()
            .cloned()
            .unwrap_or_else(|| WorldSet::empty(self.width()))
    }

    /// `|~_⪯`: `θ |~ φ` iff `¬θ ≺ ¬θ ∨ φ` or `⊤ ⪯ ¬θ`.
    pub fn infers(&self, theta: &Formula, phi: &Formula) -> bool {
        let not_theta = Formula::not(theta.clone());
        self.strictly_less(&not_theta, &Formula::or(not_theta.clone(), phi.clone()))
            || self.leq(&Formula::Top, &not_theta)
    }

    /// Sorts `formulas` by `rank(¬θ)`, least entrenched first (stable).
    pub fn order<'a>(&self, formulas: &'a [Formula]) -> Vec<(&'a Formula, Rank)> {
        let mut ranked: Vec<(&Formula, Rank)> = formulas.iter().map(|f| (f, self.neg_rank(f))).collect();
        ranked.sort_by_key(|&(_, r)| r);
        ranked
    }

    /// Carrier plus the induced preorder on `formulas`, one line each.
    pub fn render(&self, vocab: &Vocabulary, formulas: &[Formula]) -> String {
        let mut out = format!("carrier: {}\n", self.carrier.render(vocab));
        for (f, rank) in self.order(formulas) {
            let rank = if self.is_absurd() { Rank::Infinite } else { rank };
            out.push_str(&format!("  {rank}\t{}\n", f.display(vocab)));
        }
        out
    }
}

impl EntrenchmentOrder for EntrenchmentRelation {
    fn leq(&self, theta: &Formula, phi: &Formula) -> bool {
        self.is_absurd() || self.neg_rank(theta) <= self.neg_rank(phi)
    }
}

/// `⪯_U` for a full or empty `U`; same as [`EntrenchmentRelation::from_sequence`].
pub fn entrenchment_from_consequence(sequence: &RankedSequence) -> Result<EntrenchmentRelation> {
    EntrenchmentRelation::from_sequence(sequence)
}

/// `⊤`, `⊥`, every variable and its negation, and the binary connectives
/// applied to every pair of distinct variables.
pub fn base_sample(vocab: &Vocabulary) -> Vec<Formula> {
    let mut out = vec![Formula::Top, Formula::Bottom];
    for i in 0..vocab.len() {
        out.push(Formula::var(i));
        out.push(Formula::not(Formula::var(i)));
    }
    for i in 0..vocab.len() {
        for j in (i + 1)..vocab.len() {
            let (a, b) = (Formula::var(i), Formula::var(j));
            out.push(Formula::and(a.clone(), b.clone()));
            out.push(Formula::or(a.clone(), b.clone()));
            out.push(Formula::implies(a.clone(), b.clone()));
            out.push(Formula::implies(b, a));
        }
    }
    out
}

/// Checks transitivity, dominance, conjunctiveness and maximality over all
/// pairs and triples from `sample` extended with [`base_sample`].
pub fn check_e_axioms<R: EntrenchmentOrder + ?Sized>(
    relation: &R,
    sample: &[Formula],
    vocab: &Vocabulary,
) -> CheckReport {
    let sample = dedup_formulas(base_sample(vocab).into_iter().chain(sample.iter().cloned()));
    let n = sample.len();
    let sets: Vec<WorldSet> = sample.iter().map(|f| models(f, vocab)).collect();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| relation.leq(&sample[i], &sample[j])).collect())
        .collect();
    let mut report = CheckReport::default();

    for i in 0..n {
        for j in 0..n {
            // E2 dominance
            if sets[i].is_subset(&sets[j]) {
                report.check("E2 dominance", leq[i][j], || vec![sample[i].clone(), sample[j].clone()]);
            }
            // E3 conjunctiveness
            let conj = Formula::and(sample[i].clone(), sample[j].clone());
            let holds = relation.leq(&sample[i], &conj) || relation.leq(&sample[j], &conj);
            report.check("E3 conjunctiveness", holds, || {
                vec![sample[i].clone(), sample[j].clone()]
            });
            if !leq[i][j] {
                continue;
            }
            // E1 transitivity
            for k in 0..n {
                if leq[j][k] {
                    report.check("E1 transitivity", leq[i][k], || {
                        vec![sample[i].clone(), sample[j].clone(), sample[k].clone()]
                    });
                }
            }
        }
        if report.violation.is_some() {
            return report;
        }
    }

    // E4 maximality, applicable when something is strictly above ⊥.
    let bottom = sample
        .iter()
        .position(|f| *f == Formula::Bottom)
        .expect("base sample has ⊥");
    let non_absurd = (0..n).any(|k| leq[bottom][k] && !leq[k][bottom]);
    if non_absurd {
        for j in 0..n {
            if (0..n).all(|i| leq[i][j]) {
                report.check("E4 maximality", sets[j].is_full(), || vec![sample[j].clone()]);
            }
        }
    }
    report
}

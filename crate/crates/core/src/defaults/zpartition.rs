use super::base::{Default, DefaultBase};
use crate::error::{Error, Result};
use crate::logic::{models, Vocabulary, WorldSet};

/// `D` tolerates `δ` iff `{λ_δ ∧ χ_δ} ∪ D→` is consistent.
pub fn tolerates(set: &[Default], delta: &Default, vocab: &Vocabulary) -> bool {
    let witnesses = set.iter().fold(models(&delta.verification(), vocab), |acc, d| {
        acc.intersection(&models(&d.material(), vocab))
    });
    !witnesses.is_empty()
}

/// Specificity strata `(Δ₀, …, Δ_n)` of a default base, as indices into
/// [`DefaultBase::defaults`]. Each stratum keeps base order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPartition {
    strata: Vec<Vec<usize>>,
    stratum_of: Vec<usize>,
}

impl ZPartition {
    pub fn strata(&self) -> &[Vec<usize>] {
        &self.strata
    }

    pub fn len(&self) -> usize {
        self.strata.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strata.is_empty()
    }

    /// Stratum index of the default at `index`.
    pub fn stratum_of(&self, index: usize) -> usize {
        self.stratum_of[index]
    }

    pub fn stratum_defaults<'a>(&self, base: &'a DefaultBase, i: usize) -> Vec<&'a Default> {
        self.strata[i].iter().map(|&d| &base.defaults()[d]).collect()
    }

    /// One line per stratum: `Δ0: b => f`.
    pub fn render(&self, base: &DefaultBase) -> String {
        if self.strata.is_empty() {
            return "(empty partition)\n".to_string();
        }
        let mut out = String::new();
        for (i, stratum) in self.strata.iter().enumerate() {
            let items: Vec<String> = stratum
                .iter()
                .map(|&d| base.defaults()[d].display(base.vocab()).to_string())
                .collect();
            out.push_str(&format!("Δ{i}: {}\n", items.join(", ")));
        }
        out
    }
}

/// Greedy stratification: `Δ₀` collects every default tolerated by all of
/// `Δ`, `Δ₁` every remaining default tolerated by the remainder, and so on.
pub fn z_partition(base: &DefaultBase) -> Result<ZPartition> {
    if !base.materials_consistent() {
        return Err(Error::InconsistentMaterials);
    }
    let vocab = base.vocab();
    let materials = base.material_models();
    let verifications: Vec<WorldSet> = base
        .defaults()
        .iter()
        .map(|d| models(&d.verification(), vocab))
        .collect();

    let mut remaining: Vec<usize> = (0..base.len()).collect();
    let mut strata = Vec::new();
    let mut stratum_of = vec![0; base.len()];
    while !remaining.is_empty() {
        let rest = remaining
            .iter()
            .fold(vocab.all_worlds(), |acc, &d| acc.intersection(&materials[d]));
        let (tolerated, kept): (Vec<usize>, Vec<usize>) =
            remaining.iter().partition(|&&d| verifications[d].intersects(&rest));
        if tolerated.is_empty() {
            return Err(Error::NotPartitionable {
                remaining: remaining.len(),
            });
        }
        for &d in &tolerated {
            stratum_of[d] = strata.len();
        }
        strata.push(tolerated);
        remaining = kept;
    }
    Ok(ZPartition { strata, stratum_of })
}

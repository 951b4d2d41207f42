//! Lexicographic closure computed directly from maximal consistent subsets.
//!
//! This path only uses consistency checks over subsets of the base. It is
//! the reference against which the revision construction is tested.

use super::base::DefaultBase;
use super::zpartition::{z_partition, ZPartition};
use crate::error::Result;
use crate::logic::{models, Formula, WorldSet};

/// A subset of a default base, bit `i` standing for default `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Subset(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn contains(self, index: usize) -> bool {
        (self.0 >> index) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

/// A strict order `≪` on subsets of a base.
pub trait SubsetOrder {
    fn less(&self, a: Subset, b: Subset) -> bool;
}

/// `≪_lex`: compare stratum counts from the most specific stratum down.
#[derive(Debug, Clone)]
pub struct LexOrder {
    stratum_masks: Vec<u64>,
}

impl LexOrder {
    pub fn new(zp: &ZPartition) -> Self {
        Self {
            stratum_masks: zp
                .strata()
                .iter()
                .map(|s| Subset::from_indices(s.iter().copied()).0)
                .collect(),
        }
    }

    /// `|A ∩ Δ_i|` for each stratum `i`.
    pub fn counts(&self, a: Subset) -> Vec<usize> {
        self.stratum_masks
            .iter()
            .map(|m| (a.0 & m).count_ones() as usize)
            .collect()
    }
}

impl SubsetOrder for LexOrder {
    /// True iff some stratum `i` has `|A_i| < |B_i|` while every higher stratum ties.
    fn less(&self, a: Subset, b: Subset) -> bool {
        for m in self.stratum_masks.iter().rev() {
            let (ca, cb) = ((a.0 & m).count_ones(), (b.0 & m).count_ones());
            if ca != cb {
                return ca < cb;
            }
        }
        false
    }
}

pub fn lex_less(a: Subset, b: Subset, zp: &ZPartition) -> bool {
    LexOrder::new(zp).less(a, b)
}

/// `⋂ S_{γ→}` for every subset `Γ` of the base, indexed by bitmask.
fn subset_models(materials: &[WorldSet], width: usize) -> Vec<WorldSet> {
    let count = 1usize << materials.len();
    let mut out: Vec<WorldSet> = Vec::with_capacity(count);
    out.push(WorldSet::full(width));
    for mask in 1..count {
        let low = mask.trailing_zeros() as usize;
        let rest = out[mask & (mask - 1)].intersection(&materials[low]);
        out.push(rest);
    }
    out
}

/// The `≪`-maximal subsets among those whose materials are consistent with `theta`.
pub fn maximal_bases<O: SubsetOrder>(subset_models: &[WorldSet], theta: &WorldSet, order: &O) -> Vec<Subset> {
    let consistent: Vec<Subset> = (0..subset_models.len())
        .filter(|&m| subset_models[m].intersects(theta))
        .map(|m| Subset(m as u64))
        .collect();
    consistent
        .iter()
        .copied()
        .filter(|&c| !consistent.iter().any(|&d| order.less(c, d)))
        .collect()
}

/// `|~^Δ_lex` with the per-subset model sets precomputed.
#[derive(Debug, Clone)]
pub struct LexClosure {
    width: usize,
    partition: ZPartition,
    order: LexOrder,
    subset_models: Vec<WorldSet>,
}

impl LexClosure {
    pub fn new(base: &DefaultBase) -> Result<Self> {
        let partition = z_partition(base)?;
        Ok(Self::with_partition(base, partition))
    }

    pub fn with_partition(base: &DefaultBase, partition: ZPartition) -> Self {
        let width = base.vocab().world_count();
        Self {
            width,
            order: LexOrder::new(&partition),
            partition,
            subset_models: subset_models(&base.material_models(), width),
        }
    }

    pub fn partition(&self) -> &ZPartition {
        &self.partition
    }

    pub fn maximal_bases(&self, theta: &WorldSet) -> Vec<Subset> {
        maximal_bases(&self.subset_models, theta, &self.order)
    }

    /// `S_θ ∩ ⋂ S_{γ→}` for each maximal `Γ`; `θ |~ φ` iff all lie inside `S_φ`.
    pub fn extensions(&self, theta: &WorldSet) -> Vec<WorldSet> {
        self.maximal_bases(theta)
            .into_iter()
            .map(|g| self.subset_models[g.0 as usize].intersection(theta))
            .collect()
    }

    pub fn infers_sets(&self, theta: &WorldSet, phi: &WorldSet) -> bool {
        self.extensions(theta).iter().all(|ext| ext.is_subset(phi))
    }

    pub fn infers(&self, theta: &Formula, phi: &Formula) -> bool {
        use crate::logic::models_in;
        self.infers_sets(&models_in(theta, self.width), &models_in(phi, self.width))
    }
}

/// All `≪_lex`-maximal `Γ ⊆ Δ` with `Γ→ ∪ {θ}` consistent, by enumeration of `2^Δ`.
pub fn lex_maximal_bases(base: &DefaultBase, zp: &ZPartition, theta: &Formula) -> Vec<Subset> {
    let models_by_subset = subset_models(&base.material_models(), base.vocab().world_count());
    maximal_bases(&models_by_subset, &models(theta, base.vocab()), &LexOrder::new(zp))
}

/// `θ |~^Δ_lex φ`: every maximal `Γ` has `Γ→ ∪ {θ} ⊨ φ`.
pub fn lex_infers_direct(base: &DefaultBase, theta: &Formula, phi: &Formula) -> Result<bool> {
    Ok(LexClosure::new(base)?.infers(theta, phi))
}

//! Ranked sequences of disjoint world sets and the rational consequence
//! relation they induce.
//!
//! Layer 0 holds the most plausible worlds. A world outside every layer is
//! impossible. Sequences whose layers cover every world are *full*; those
//! covering none are *empty*. Only full and empty sequences stand for
//! entrenchment relations; partial ones appear as intermediate values.

use std::fmt;

use crate::error::{Error, Result};
use crate::logic::{models_in, Formula, Vocabulary, World, WorldSet};

/// Position of the first layer meeting a set of worlds, or `Infinite` if none.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    Finite(usize),
    Infinite,
}

impl Rank {
    pub fn is_infinite(self) -> bool {
        matches!(self, Rank::Infinite)
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(i) => write!(f, "{i}"),
            Rank::Infinite => f.write_str("∞"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coverage {
    Full,
    Empty,
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankedSequence {
    width: usize,
    layers: Vec<WorldSet>,
}

impl RankedSequence {
    /// Builds a sequence, checking that the layers are pairwise disjoint.
    pub fn new(width: usize, layers: Vec<WorldSet>) -> Result<Self> {
        let mut seen = WorldSet::empty(width);
        for layer in &layers {
            if layer.width() != width {
                return Err(Error::WidthMismatch(width, layer.width()));
            }
            if seen.intersects(layer) {
                return Err(Error::Format {
                    line: 0,
                    message: "ranked sequence layers overlap".into(),
                });
            }
            seen = seen.union(layer);
        }
        Ok(Self { width, layers })
    }

    /// Convenience constructor from lists of world indices.
    pub fn from_indices(width: usize, layers: &[&[usize]]) -> Result<Self> {
        Self::new(
            width,
            layers
                .iter()
                .map(|l| WorldSet::from_worlds(width, l.iter().copied()))
                .collect(),
        )
    }

    /// `(W)`: every world equally plausible.
    pub fn uniform(width: usize) -> Self {
        Self {
            width,
            layers: vec![WorldSet::full(width)],
        }
    }

    /// The canonical empty sequence `()`.
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            layers: Vec::new(),
        }
    }

    pub(crate) fn from_layers_unchecked(width: usize, layers: Vec<WorldSet>) -> Self {
        debug_assert!(Self::new(width, layers.clone()).is_ok());
        Self { width, layers }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn layers(&self) -> &[WorldSet] {
        &self.layers
    }

    pub fn support(&self) -> WorldSet {
        self.layers
            .iter()
            .fold(WorldSet::empty(self.width), |acc, l| acc.union(l))
    }

    pub fn classify(&self) -> Coverage {
        let support = self.support();
        if support.is_empty() {
            Coverage::Empty
        } else if support.is_full() {
            Coverage::Full
        } else {
            Coverage::Partial
        }
    }

    pub fn is_full(&self) -> bool {
        self.classify() == Coverage::Full
    }

    pub fn is_empty(&self) -> bool {
        self.classify() == Coverage::Empty
    }

    /// Membership in the class of full-or-empty sequences.
    pub fn in_upsilon(&self) -> bool {
        self.classify() != Coverage::Partial
    }

    pub(crate) fn require_upsilon(&self) -> Result<()> {
        if self.in_upsilon() {
            Ok(())
        } else {
            Err(Error::PartialSequence)
        }
    }

    /// `|~_U` is consistency preserving iff the layers cover `W`.
    pub fn is_consistency_preserving(&self) -> bool {
        self.is_full()
    }

    /// Drops empty layers, keeping the order of the rest.
    pub fn canonicalize(&self) -> Self {
        Self {
            width: self.width,
            layers: self.layers.iter().filter(|l| !l.is_empty()).cloned().collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.layers.iter().all(|l| !l.is_empty())
    }

    /// Same induced consequence relation, decided on canonical forms.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.width == other.width && self.canonicalize().layers == other.canonicalize().layers
    }

    /// Returns a copy with an empty layer inserted before position `at`.
    pub fn with_empty_layer(&self, at: usize) -> Self {
        let mut layers = self.layers.clone();
        layers.insert(at.min(layers.len()), WorldSet::empty(self.width));
        Self {
            width: self.width,
            layers,
        }
    }

    pub fn rank_of_set(&self, worlds: &WorldSet) -> Rank {
        self.layers
            .iter()
            .position(|l| l.intersects(worlds))
            .map_or(Rank::Infinite, Rank::Finite)
    }

    /// Least `i` with `U_i ∩ S_θ ≠ ∅`.
    pub fn rank(&self, theta: &Formula) -> Rank {
        self.rank_of_set(&models_in(theta, self.width))
    }

    pub fn world_rank(&self, world: World) -> Rank {
        self.layers
            .iter()
            .position(|l| l.contains(world))
            .map_or(Rank::Infinite, Rank::Finite)
    }

    /// `θ |~_U φ` on model sets.
    pub fn infers_sets(&self, theta: &WorldSet, phi: &WorldSet) -> bool {
        let r_theta = self.rank_of_set(theta);
        r_theta.is_infinite() || r_theta < self.rank_of_set(&theta.difference(phi))
    }

    /// `θ |~_U φ` iff `rank(θ) < rank(θ ∧ ¬φ)` or `rank(θ) = ∞`.
    pub fn infers(&self, theta: &Formula, phi: &Formula) -> bool {
        self.infers_sets(&models_in(theta, self.width), &models_in(phi, self.width))
    }

    /// Renders as `[{w, …} ; {w, …}]`.
    pub fn render(&self, vocab: &Vocabulary) -> String {
        let parts: Vec<String> = self.layers.iter().map(|l| vocab.render_set(l)).collect();
        format!("[{}]", parts.join(" ; "))
    }
}

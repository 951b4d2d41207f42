use std::fmt;

use crate::error::{Error, Result};

/// Default upper bound on the number of propositional variables.
pub const DEFAULT_MAX_VARS: usize = 16;
/// Upper bound that no configuration may exceed (2^24 worlds per set).
pub const HARD_MAX_VARS: usize = 24;

/// An ordered list of distinct propositional variables.
///
/// Variable `i` is bit `i` of a world index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vocabulary {
    names: Vec<String>,
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(names, DEFAULT_MAX_VARS)
    }

    pub fn with_cap<I, S>(names: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Vocabulary("at least one variable is required".into()));
        }
        let cap = cap.min(HARD_MAX_VARS);
        if names.len() > cap {
            return Err(Error::TooManyVariables {
                count: names.len(),
                cap,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || name == "true" || name == "false" {
                return Err(Error::Vocabulary(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::Vocabulary(format!("variable `{name}` declared twice")));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Number of worlds, `2^n`.
    pub fn world_count(&self) -> usize {
        1usize << self.names.len()
    }

    pub fn worlds(&self) -> impl Iterator<Item = World> {
        (0..self.world_count()).map(World)
    }

    pub fn all_worlds(&self) -> WorldSet {
        WorldSet::full(self.world_count())
    }

    pub fn no_worlds(&self) -> WorldSet {
        WorldSet::empty(self.world_count())
    }

    /// Renders a world as a space-separated assignment, e.g. `b ¬f p`.
    pub fn render_world(&self, world: World) -> String {
        self.names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                if world.get(i) {
                    name.clone()
                } else {
                    format!("¬{name}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Renders a set of worlds as `{w, w, …}` with worlds sorted by index.
    pub fn render_set(&self, set: &WorldSet) -> String {
        let parts: Vec<String> = set.iter().map(|w| self.render_world(w)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A propositional world; bit `i` of the index is the truth value of variable `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World(pub usize);

impl World {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn get(self, var: usize) -> bool {
        (self.0 >> var) & 1 == 1
    }
}

/// A subset of the `2^n` worlds, stored as a fixed-width bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WorldSet {
    width: usize,
    words: Vec<u64>,
}

impl WorldSet {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self {
            width,
            words: vec![u64::MAX; width.div_ceil(64)],
        };
        set.trim();
        set
    }

    pub fn from_worlds<I: IntoIterator<Item = usize>>(width: usize, worlds: I) -> Self {
        let mut set = Self::empty(width);
        for w in worlds {
            set.insert(World(w));
        }
        set
    }

    /// Worlds in which variable `var` is true.
    pub fn variable(width: usize, var: usize) -> Self {
        let mut set = Self::empty(width);
        if var < 6 {
            // Repeating pattern within each word: blocks of 2^var zeros then ones.
            let mut pattern = 0u64;
            for bit in 0..64 {
                if (bit >> var) & 1 == 1 {
                    pattern |= 1 << bit;
                }
            }
            set.words.fill(pattern);
        } else {
            for (i, word) in set.words.iter_mut().enumerate() {
                if ((i * 64) >> var) & 1 == 1 {
                    *word = u64::MAX;
                }
            }
        }
        set.trim();
        set
    }

    fn trim(&mut self) {
        let rem = self.width % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Number of worlds the set ranges over (`2^n`).
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, world: World) -> bool {
        world.0 < self.width && (self.words[world.0 / 64] >> (world.0 % 64)) & 1 == 1
    }

    pub fn insert(&mut self, world: World) {
        assert!(world.0 < self.width, "world {} out of range", world.0);
        self.words[world.0 / 64] |= 1 << (world.0 % 64);
    }

    pub fn remove(&mut self, world: World) {
        if world.0 < self.width {
            self.words[world.0 / 64] &= !(1 << (world.0 % 64));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.width
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = Self {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Worlds in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = World> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(World(i * 64 + tz))
            })
        })
    }

    pub fn first(&self) -> Option<World> {
        self.iter().next()
    }

    fn zip(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.width, other.width, "world sets over different vocabularies");
        Self {
            width: self.width,
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| op(a, b)).collect(),
        }
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|w| w.0)).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_masks_match_bit_encoding() {
        for width_log in [1usize, 3, 7, 8] {
            let width = 1 << width_log;
            for var in 0..width_log {
                let set = WorldSet::variable(width, var);
                for w in 0..width {
                    assert_eq!(set.contains(World(w)), (w >> var) & 1 == 1, "var {var} world {w}");
                }
            }
        }
    }

    #[test]
    fn complement_stays_within_width() {
        let set = WorldSet::from_worlds(4, [1]);
        let comp = set.complement();
        assert_eq!(comp.iter().map(World::index).collect::<Vec<_>>(), vec![0, 2, 3]);
        assert!(WorldSet::empty(4).complement().is_full());
    }

    #[test]
    fn vocabulary_rejects_bad_names() {
        assert!(Vocabulary::new(["p", "p"]).is_err());
        assert!(Vocabulary::new(["true"]).is_err());
        assert!(Vocabulary::new(["1x"]).is_err());
        assert!(Vocabulary::new(Vec::<String>::new()).is_err());
        assert!(matches!(
            Vocabulary::with_cap(["a", "b", "c"], 2),
            Err(Error::TooManyVariables { count: 3, cap: 2 })
        ));
    }

    #[test]
    fn render_world_uses_negated_literals() {
        let v = Vocabulary::new(["b", "f", "p"]).unwrap();
        assert_eq!(v.render_world(World(5)), "b ¬f p");
        assert_eq!(v.render_set(&WorldSet::from_worlds(8, [0, 3])), "{¬b ¬f ¬p, b f ¬p}");
    }
}

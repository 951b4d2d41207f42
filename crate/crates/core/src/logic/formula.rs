use std::fmt;

use super::worlds::{Vocabulary, World, WorldSet};

/// Propositional formula over a fixed vocabulary; variables are indices.
///
/// Equality is structural: `p & q` and `q & p` are different formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Bottom,
    Var(usize),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(index: usize) -> Self {
        Formula::Var(index)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// Left-nested conjunction; `⊤` for an empty iterator.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; `⊥` for an empty iterator.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bottom)
    }

    /// The conjunction of literals that holds exactly in `world`.
    pub fn world_description(vocab: &Vocabulary, world: World) -> Self {
        Formula::conjunction((0..vocab.len()).map(|i| {
            if world.get(i) {
                Formula::var(i)
            } else {
                Formula::not(Formula::var(i))
            }
        }))
    }

    /// Largest variable index referenced plus one.
    pub fn var_bound(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom => 0,
            Formula::Var(i) => i + 1,
            Formula::Not(a) => a.var_bound(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => a.var_bound().max(b.var_bound()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Var(_) => 0,
            Formula::Not(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Truth value in a single world.
    pub fn eval(&self, world: World) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Var(i) => world.get(*i),
            Formula::Not(a) => !a.eval(world),
            Formula::And(a, b) => a.eval(world) && b.eval(world),
            Formula::Or(a, b) => a.eval(world) || b.eval(world),
            Formula::Implies(a, b) => !a.eval(world) || b.eval(world),
        }
    }

    /// Renders with the minimal parentheses needed to re-parse to the same tree.
    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> FormulaDisplay<'a> {
        FormulaDisplay { formula: self, vocab }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(_) => 4,
            Formula::Top | Formula::Bottom | Formula::Var(_) => 5,
        }
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    vocab: &'a Vocabulary,
}

impl FormulaDisplay<'_> {
    fn write(&self, f: &mut fmt::Formatter<'_>, node: &Formula, min_prec: u8) -> fmt::Result {
        let paren = node.precedence() < min_prec;
        if paren {
            f.write_str("(")?;
        }
        match node {
            Formula::Top => f.write_str("true")?,
            Formula::Bottom => f.write_str("false")?,
            Formula::Var(i) => f.write_str(self.vocab.name(*i))?,
            Formula::Not(a) => {
                f.write_str("!")?;
                self.write(f, a, 4)?;
            }
            Formula::And(a, b) => {
                self.write(f, a, 3)?;
                f.write_str(" & ")?;
                self.write(f, b, 4)?;
            }
            Formula::Or(a, b) => {
                self.write(f, a, 2)?;
                f.write_str(" | ")?;
                self.write(f, b, 3)?;
            }
            Formula::Implies(a, b) => {
                self.write(f, a, 2)?;
                f.write_str(" -> ")?;
                self.write(f, b, 1)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.formula, 0)
    }
}

/// `S_φ`: the worlds satisfying `phi`, by structural recursion over bit vectors.
pub fn models(phi: &Formula, vocab: &Vocabulary) -> WorldSet {
    models_in(phi, vocab.world_count())
}

pub(crate) fn models_in(phi: &Formula, width: usize) -> WorldSet {
    match phi {
        Formula::Top => WorldSet::full(width),
        Formula::Bottom => WorldSet::empty(width),
        Formula::Var(i) => WorldSet::variable(width, *i),
        Formula::Not(a) => models_in(a, width).complement(),
        Formula::And(a, b) => models_in(a, width).intersection(&models_in(b, width)),
        Formula::Or(a, b) => models_in(a, width).union(&models_in(b, width)),
        Formula::Implies(a, b) => models_in(a, width).complement().union(&models_in(b, width)),
    }
}

/// Worlds satisfying every member of `set`; all of `W` for the empty set.
pub fn models_of_all<'a, I>(set: I, vocab: &Vocabulary) -> WorldSet
where
    I: IntoIterator<Item = &'a Formula>,
{
    set.into_iter()
        .fold(vocab.all_worlds(), |acc, f| acc.intersection(&models(f, vocab)))
}

/// `E ⊨ φ`.
pub fn entails(premises: &[Formula], phi: &Formula, vocab: &Vocabulary) -> bool {
    models_of_all(premises, vocab).is_subset(&models(phi, vocab))
}

pub fn is_consistent(set: &[Formula], vocab: &Vocabulary) -> bool {
    !models_of_all(set, vocab).is_empty()
}

pub fn is_tautology(phi: &Formula, vocab: &Vocabulary) -> bool {
    models(phi, vocab).is_full()
}

/// `sent_E(w)`: the members of `set` true at `world`, in input order.
pub fn satisfied_sentences(world: World, set: &[Formula]) -> Vec<&Formula> {
    set.iter().filter(|f| f.eval(world)).collect()
}

/// Pushes `f` unless a structurally equal formula is already present.
pub fn push_unique(set: &mut Vec<Formula>, f: Formula) -> bool {
    if set.contains(&f) {
        false
    } else {
        set.push(f);
        true
    }
}

/// Removes structural duplicates, keeping first occurrences.
pub fn dedup_formulas<I: IntoIterator<Item = Formula>>(items: I) -> Vec<Formula> {
    let mut out = Vec::new();
    for f in items {
        push_unique(&mut out, f);
    }
    out
}

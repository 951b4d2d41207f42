use std::fmt;

use crate::error::{Error, Result};
use crate::logic::{models, models_of_all, Formula, Vocabulary, WorldSet};

/// Default upper bound on the number of defaults in a base.
pub const DEFAULT_MAX_DEFAULTS: usize = 12;
/// Subsets of a base are bitmasks; no configuration may exceed this.
pub const HARD_MAX_DEFAULTS: usize = 24;

/// `λ ⇒ χ`: if `λ` then normally `χ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Default {
    pub premise: Formula,
    pub conclusion: Formula,
}

impl Default {
    pub fn new(premise: Formula, conclusion: Formula) -> Self {
        Self { premise, conclusion }
    }

    /// The material counterpart `λ → χ`.
    pub fn material(&self) -> Formula {
        Formula::implies(self.premise.clone(), self.conclusion.clone())
    }

    /// `λ ∧ χ`, the formula a tolerating set must be consistent with.
    pub fn verification(&self) -> Formula {
        Formula::and(self.premise.clone(), self.conclusion.clone())
    }

    pub fn display<'a>(&'a self, vocab: &'a Vocabulary) -> DefaultDisplay<'a> {
        DefaultDisplay { default: self, vocab }
    }
}

pub struct DefaultDisplay<'a> {
    default: &'a Default,
    vocab: &'a Vocabulary,
}

impl fmt::Display for DefaultDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} => {}",
            self.default.premise.display(self.vocab),
            self.default.conclusion.display(self.vocab)
        )
    }
}

/// A finite set of defaults over one vocabulary.
///
/// Structural duplicates are dropped on construction; defaults with
/// equivalent but distinct formulas are kept apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefaultBase {
    vocab: Vocabulary,
    defaults: Vec<Default>,
}

impl DefaultBase {
    pub fn new(vocab: Vocabulary, defaults: Vec<Default>) -> Result<Self> {
        Self::with_cap(vocab, defaults, DEFAULT_MAX_DEFAULTS)
    }

    pub fn with_cap(vocab: Vocabulary, defaults: Vec<Default>, cap: usize) -> Result<Self> {
        let mut unique: Vec<Default> = Vec::with_capacity(defaults.len());
        for d in defaults {
            if d.premise.var_bound() > vocab.len() || d.conclusion.var_bound() > vocab.len() {
                return Err(Error::Vocabulary(
                    "default mentions a variable outside the vocabulary".into(),
                ));
            }
            if !unique.contains(&d) {
                unique.push(d);
            }
        }
        let cap = cap.min(HARD_MAX_DEFAULTS);
        if unique.len() > cap {
            return Err(Error::TooManyDefaults {
                count: unique.len(),
                cap,
            });
        }
        Ok(Self {
            vocab,
            defaults: unique,
        })
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn defaults(&self) -> &[Default] {
        &self.defaults
    }

    pub fn len(&self) -> usize {
        self.defaults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defaults.is_empty()
    }

    /// `Δ→`, in base order.
    pub fn materials(&self) -> Vec<Formula> {
        self.defaults.iter().map(Default::material).collect()
    }

    pub fn material_models(&self) -> Vec<WorldSet> {
        self.defaults
            .iter()
            .map(|d| models(&d.material(), &self.vocab))
            .collect()
    }

    pub fn materials_consistent(&self) -> bool {
        !models_of_all(&self.materials(), &self.vocab).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse_formula;

    #[test]
    fn structural_duplicates_are_dropped() {
        let v = Vocabulary::new(["p", "q"]).unwrap();
        let d = |a: &str, b: &str| Default::new(parse_formula(a, &v).unwrap(), parse_formula(b, &v).unwrap());
        let base = DefaultBase::new(v.clone(), vec![d("p", "q"), d("p", "q"), d("p", "q & q")]).unwrap();
        assert_eq!(base.len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        let v = Vocabulary::new(["p"]).unwrap();
        let defaults = vec![
            Default::new(Formula::var(0), Formula::Top),
            Default::new(Formula::Top, Formula::var(0)),
        ];
        assert!(matches!(
            DefaultBase::with_cap(v, defaults, 1),
            Err(Error::TooManyDefaults { count: 2, cap: 1 })
        ));
    }

    #[test]
    fn display_round_trips_through_kb_syntax() {
        let v = Vocabulary::new(["b", "f"]).unwrap();
        let d = Default::new(Formula::var(0), Formula::not(Formula::var(1)));
        assert_eq!(d.display(&v).to_string(), "b => !f");
    }
}

use super::base::DefaultBase;
use super::sentences::sentence_sequence;
use super::zpartition::{z_partition, ZPartition};
use crate::error::Result;
use crate::logic::{models, Formula, WorldSet};
use crate::ranked::RankedSequence;
use crate::revision::{evaluate_chain, RevisionChain};

/// `Δ_i→` for each stratum, in stratum order.
pub fn stratum_materials(base: &DefaultBase, zp: &ZPartition) -> Vec<Vec<Formula>> {
    zp.strata()
        .iter()
        .map(|s| s.iter().map(|&d| base.defaults()[d].material()).collect())
        .collect()
}

/// `(W) * U^{Δ₀→} * … * U^{Δ_n→}` as an unevaluated chain.
pub fn lex_chain(base: &DefaultBase, zp: &ZPartition) -> RevisionChain {
    let vocab = base.vocab();
    let mut chain = RevisionChain::new(vocab.world_count());
    for materials in stratum_materials(base, zp) {
        chain.push(sentence_sequence(&materials, vocab));
    }
    chain
}

/// The ranked sequence of the lexicographic closure, obtained by revising
/// `(W)` successively by each stratum's material counterparts.
pub fn lex_sequence(base: &DefaultBase) -> Result<RankedSequence> {
    let zp = z_partition(base)?;
    lex_sequence_with(base, &zp)
}

pub fn lex_sequence_with(base: &DefaultBase, zp: &ZPartition) -> Result<RankedSequence> {
    evaluate_chain(&lex_chain(base, zp))
}

/// System Z ranking: `κ(w) = 0` if `w` satisfies all of `Δ→`, otherwise one
/// more than the highest stratum containing a default whose material `w` falsifies.
pub fn rational_closure_sequence(base: &DefaultBase, zp: &ZPartition) -> RankedSequence {
    let vocab = base.vocab();
    let width = vocab.world_count();
    let stratum_models: Vec<WorldSet> = stratum_materials(base, zp)
        .iter()
        .map(|ms| {
            ms.iter()
                .fold(WorldSet::full(width), |acc, m| acc.intersection(&models(m, vocab)))
        })
        .collect();
    let mut layers = vec![WorldSet::empty(width); zp.len() + 1];
    for w in vocab.worlds() {
        let kappa = stratum_models.iter().rposition(|s| !s.contains(w)).map_or(0, |i| i + 1);
        layers[kappa].insert(w);
    }
    RankedSequence::from_layers_unchecked(width, layers).canonicalize()
}

pub fn rational_closure_infers(base: &DefaultBase, theta: &Formula, phi: &Formula) -> Result<bool> {
    let zp = z_partition(base)?;
    Ok(rational_closure_sequence(base, &zp).infers(theta, phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::kb::parse_kb;
    use crate::logic::parse_formula;

    fn penguin() -> DefaultBase {
        parse_kb("vars: b, f, p\ndefault: b => f\ndefault: p => b\ndefault: p => !f").unwrap()
    }

    #[test]
    fn empty_base_gives_uniform() {
        let base = parse_kb("vars: a, b").unwrap();
        assert_eq!(lex_sequence(&base).unwrap(), RankedSequence::uniform(4));
    }

    #[test]
    fn single_default() {
        let base = parse_kb("vars: b, f\ndefault: b => f").unwrap();
        let s = models(&parse_formula("b -> f", base.vocab()).unwrap(), base.vocab());
        assert_eq!(lex_sequence(&base).unwrap().layers(), &[s.clone(), s.complement()]);
    }

    #[test]
    fn penguin_sequence() {
        let expected = RankedSequence::from_indices(8, &[&[0, 2, 3], &[1, 5], &[4, 7], &[6]]).unwrap();
        assert_eq!(lex_sequence(&penguin()).unwrap(), expected);
    }

    #[test]
    fn rational_closure_examples() {
        let base = penguin();
        let f = |s: &str| parse_formula(s, base.vocab()).unwrap();
        assert!(rational_closure_infers(&base, &f("p"), &f("!f")).unwrap());
        assert!(rational_closure_infers(&base, &f("b"), &f("f")).unwrap());
        let zp = z_partition(&base).unwrap();
        // Worlds 1 and 5 violate only b -> f; 4, 6 and 7 violate a p-default.
        let expected = RankedSequence::from_indices(8, &[&[0, 2, 3], &[1, 5], &[4, 6, 7]]).unwrap();
        assert_eq!(rational_closure_sequence(&base, &zp), expected);

        let empty = parse_kb("vars: p, q").unwrap();
        for a in crate::entrenchment::base_sample(empty.vocab()) {
            for b in crate::entrenchment::base_sample(empty.vocab()) {
                assert_eq!(
                    rational_closure_infers(&empty, &a, &b).unwrap(),
                    crate::logic::entails(std::slice::from_ref(&a), &b, empty.vocab())
                );
            }
        }
    }
}

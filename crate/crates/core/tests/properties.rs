use lexrev_core::defaults::{lex_less, sentence_sequence, sorted_conjunction, LexClosure, Subset};
use lexrev_core::gen::{self, instance_rng};
use lexrev_core::logic::{entails, models};
use lexrev_core::{
    entrenchment_from_set, lex_sequence, revise_sequence, z_partition, Coverage, EntrenchmentOrder,
    EntrenchmentRelation, Formula, RankedSequence, RevisionChain,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonicalize_is_idempotent_and_keeps_inference(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let u = gen::random_upsilon(&mut rng, 8, 0.2).with_empty_layer(1);
        let c = u.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert!(c.is_canonical());
        for theta in gen::random_formulas(&mut rng, 3, 6, 3) {
            for phi in gen::random_formulas(&mut rng, 3, 6, 3) {
                prop_assert_eq!(u.infers(&theta, &phi), c.infers(&theta, &phi));
            }
        }
    }

    #[test]
    fn full_sequences_are_consistency_preserving(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let u = gen::random_full_sequence(&mut rng, 8);
        prop_assert_eq!(u.classify(), Coverage::Full);
        prop_assert!(u.is_consistency_preserving());
    }

    #[test]
    fn revision_result_is_full_unless_input_empty(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let u = gen::random_upsilon(&mut rng, 8, 0.3);
        let v = gen::random_upsilon(&mut rng, 8, 0.3);
        let r = revise_sequence(&u, &v).unwrap();
        prop_assert!(r.is_canonical());
        prop_assert_eq!(r.is_full(), !v.is_empty());
        if v.is_full() {
            let first_input = v.canonicalize().layers()[0].clone();
            prop_assert!(r.layers()[0].is_subset(&first_input));
        }
    }

    #[test]
    fn chains_are_bracket_independent(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let mut chain = RevisionChain::new(8);
        for _ in 0..3 {
            chain.push(gen::random_full_sequence(&mut rng, 8));
        }
        let left = chain.evaluate().unwrap();
        let mut right = chain.steps[2].canonicalize();
        for step in chain.steps[..2].iter().rev() {
            right = revise_sequence(step, &right).unwrap();
        }
        right = revise_sequence(&chain.initial, &right).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn padded_carriers_give_identical_relations(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let u = gen::random_upsilon(&mut rng, 8, 0.2);
        let a = EntrenchmentRelation::from_sequence(&u).unwrap();
        let b = EntrenchmentRelation::from_sequence(&u.with_empty_layer(0)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn beliefs_are_deductively_closed(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let r = gen::random_relation(&mut rng, &vocab, 0.1);
        let sample = gen::random_formulas(&mut rng, 3, 12, 3);
        for theta in &sample {
            for phi in &sample {
                if r.belief_holds(theta) && entails(std::slice::from_ref(theta), phi, &vocab) {
                    prop_assert!(r.belief_holds(phi));
                }
            }
        }
    }

    #[test]
    fn strict_entrenchment_is_asymmetric(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let r = gen::random_relation(&mut rng, &vocab, 0.1);
        let sample = gen::random_formulas(&mut rng, 3, 10, 3);
        for a in &sample {
            prop_assert!(!r.strictly_less(a, a));
            for b in &sample {
                prop_assert!(!(r.strictly_less(a, b) && r.strictly_less(b, a)));
                prop_assert!(r.leq(a, b) || r.leq(b, a));
            }
        }
    }

    #[test]
    fn lex_order_is_a_strict_partial_order(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let base = gen::random_admissible_base(&mut rng, &vocab, 5);
        let zp = z_partition(&base).unwrap();
        let all: Vec<Subset> = (0..(1u64 << base.len())).map(Subset).collect();
        for &a in &all {
            prop_assert!(!lex_less(a, a, &zp));
            for &b in &all {
                if lex_less(a, b, &zp) {
                    prop_assert!(!lex_less(b, a, &zp));
                    for &c in &all {
                        if lex_less(b, c, &zp) {
                            prop_assert!(lex_less(a, c, &zp));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lex_sequence_matches_direct_closure_on_all_premises(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let base = gen::random_admissible_base(&mut rng, &vocab, 5);
        let seq = lex_sequence(&base).unwrap();
        let closure = LexClosure::new(&base).unwrap();
        // Every premise up to equivalence; the conclusion is the closure's own extension.
        for mask in 0u32..256 {
            let theta = lexrev_core::WorldSet::from_worlds(8, (0..8).filter(|w| (mask >> w) & 1 == 1));
            let union = closure
                .extensions(&theta)
                .into_iter()
                .fold(lexrev_core::WorldSet::empty(8), |acc, e| acc.union(&e));
            let most_plausible = match seq.rank_of_set(&theta) {
                lexrev_core::Rank::Infinite => lexrev_core::WorldSet::empty(8),
                lexrev_core::Rank::Finite(r) => seq.layers()[r].intersection(&theta),
            };
            prop_assert_eq!(union, most_plausible);
        }
    }

    #[test]
    fn conjunct_order_does_not_matter(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let items = gen::random_formulas(&mut rng, 3, 4, 2);
        let shuffled = gen::shuffled(&mut rng, &items);
        let a = sentence_sequence(&[Formula::conjunction(items.clone())], &vocab);
        let b = sentence_sequence(&[Formula::conjunction(shuffled.clone())], &vocab);
        prop_assert_eq!(a.canonicalize(), b.canonicalize());
        prop_assert_eq!(sorted_conjunction(&items, &vocab), sorted_conjunction(&shuffled, &vocab));
    }

    #[test]
    fn generated_relations_believe_exactly_the_consequences(seed in any::<u64>()) {
        let mut rng = instance_rng(seed, 0);
        let vocab = gen::vocabulary(3);
        let set = gen::random_formula_set(&mut rng, 3, 4, 2);
        let r = entrenchment_from_set(&set, &vocab);
        for theta in gen::random_formulas(&mut rng, 3, 12, 3) {
            prop_assert_eq!(r.belief_holds(&theta), entails(&set, &theta, &vocab));
        }
        let first = r.most_plausible();
        if !r.is_absurd() {
            let all: lexrev_core::WorldSet = set
                .iter()
                .fold(RankedSequence::uniform(8).support(), |acc, f| acc.intersection(&models(f, &vocab)));
            prop_assert_eq!(first, all);
        }
    }
}

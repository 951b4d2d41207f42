//! Seeded random instances for property sweeps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::defaults::{z_partition, Default, DefaultBase};
use crate::entrenchment::EntrenchmentRelation;
use crate::logic::{Formula, Vocabulary, WorldSet};
use crate::ranked::RankedSequence;

pub type InstanceRng = ChaCha8Rng;

/// Independent, reproducible stream for instance `index` of a sweep.
pub fn instance_rng(seed: u64, index: u64) -> InstanceRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Vocabulary `a, b, c, …` of `n` variables.
pub fn vocabulary(n: usize) -> Vocabulary {
    assert!((1..=26).contains(&n));
    Vocabulary::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string())).expect("valid names")
}

pub fn random_formula<R: Rng>(rng: &mut R, vars: usize, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..20) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::var(rng.gen_range(0..vars)),
        };
    }
    match rng.gen_range(0..4) {
        0 => Formula::not(random_formula(rng, vars, depth - 1)),
        1 => Formula::and(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
        2 => Formula::or(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
        _ => Formula::implies(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        ),
    }
}

pub fn random_formulas<R: Rng>(rng: &mut R, vars: usize, count: usize, depth: usize) -> Vec<Formula> {
    (0..count).map(|_| random_formula(rng, vars, depth)).collect()
}

/// Random literal conjunction over a random subset of the variables.
pub fn random_literal_conjunction<R: Rng>(rng: &mut R, vars: usize) -> Formula {
    let mut lits = Vec::new();
    for i in 0..vars {
        match rng.gen_range(0..3) {
            0 => lits.push(Formula::var(i)),
            1 => lits.push(Formula::not(Formula::var(i))),
            _ => {}
        }
    }
    Formula::conjunction(lits)
}

/// All `3^n` conjunctions of literals, one per partial assignment; the empty one is `⊤`.
pub fn literal_conjunctions(vocab: &Vocabulary) -> Vec<Formula> {
    let n = vocab.len();
    let total = 3usize.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut lits = Vec::new();
            for i in 0..n {
                match code % 3 {
                    1 => lits.push(Formula::var(i)),
                    2 => lits.push(Formula::not(Formula::var(i))),
                    _ => {}
                }
                code /= 3;
            }
            Formula::conjunction(lits)
        })
        .collect()
}

/// A random full sequence over `width` worlds, possibly padded with empty layers.
pub fn random_full_sequence<R: Rng>(rng: &mut R, width: usize) -> RankedSequence {
    let levels = rng.gen_range(1..=width.min(6));
    let mut layers = vec![WorldSet::empty(width); levels];
    for w in 0..width {
        let level = rng.gen_range(0..levels);
        layers[level].insert(crate::logic::World(w));
    }
    let mut seq = RankedSequence::new(width, layers).expect("disjoint by construction");
    if rng.gen_bool(0.2) {
        let at = rng.gen_range(0..=seq.layers().len());
        seq = seq.with_empty_layer(at);
    }
    seq
}

/// A random member of the full-or-empty class; empty with probability `p_empty`.
pub fn random_upsilon<R: Rng>(rng: &mut R, width: usize, p_empty: f64) -> RankedSequence {
    if rng.gen_bool(p_empty) {
        let pads = rng.gen_range(0..3);
        let mut seq = RankedSequence::empty(width);
        for _ in 0..pads {
            seq = seq.with_empty_layer(0);
        }
        seq
    } else {
        random_full_sequence(rng, width)
    }
}

pub fn random_relation<R: Rng>(rng: &mut R, vocab: &Vocabulary, p_absurd: f64) -> EntrenchmentRelation {
    EntrenchmentRelation::from_sequence(&random_upsilon(rng, vocab.world_count(), p_absurd))
        .expect("random_upsilon yields full or empty sequences")
}

/// Between `0` and `max` random sentences (structural duplicates possible).
pub fn random_formula_set<R: Rng>(rng: &mut R, vars: usize, max: usize, depth: usize) -> Vec<Formula> {
    let count = rng.gen_range(0..=max);
    random_formulas(rng, vars, count, depth)
}

fn random_default<R: Rng>(rng: &mut R, vars: usize) -> Default {
    let premise = if rng.gen_bool(0.5) {
        random_literal_conjunction(rng, vars)
    } else {
        random_formula(rng, vars, 2)
    };
    Default::new(premise, random_formula(rng, vars, 1))
}

/// A random base of at most `max_defaults` defaults whose Z-partition exists.
pub fn random_admissible_base<R: Rng>(rng: &mut R, vocab: &Vocabulary, max_defaults: usize) -> DefaultBase {
    loop {
        let count = rng.gen_range(0..=max_defaults);
        let defaults = (0..count).map(|_| random_default(rng, vocab.len())).collect();
        let base = DefaultBase::new(vocab.clone(), defaults).expect("within caps");
        if z_partition(&base).is_ok() {
            return base;
        }
    }
}

/// A random subset of `items`, order preserved.
pub fn random_subset<R: Rng, T: Clone>(rng: &mut R, items: &[T]) -> Vec<T> {
    items.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

pub fn shuffled<R: Rng, T: Clone>(rng: &mut R, items: &[T]) -> Vec<T> {
    let mut out = items.to_vec();
    out.shuffle(rng);
    out
}

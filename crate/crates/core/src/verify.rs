//! Seeded property suites over random instances.
//!
//! Instance `i` of a run draws from [`instance_rng`]`(seed, i)`, so results
//! do not depend on the thread count. Instances run in parallel and are
//! reported in index order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;

use crate::defaults::{
    cardinality_strictly_prec, conjecture_check, entrenchment_from_set, inclusion_strictly_prec, lex_chain,
    lex_sequence_with, literal_queries, stratum_materials, theta_chain, tolerates, z_partition, ConjectureReport,
    DefaultBase, LexClosure, ZPartition,
};
use crate::entrenchment::{base_sample, check_e_axioms, EntrenchmentOrder, EntrenchmentRelation};
use crate::error::{Error, Result};
use crate::gen::{self, instance_rng, InstanceRng};
use crate::klm::check_rational_postulates;
use crate::logic::{dedup_formulas, entails, is_consistent, models, Formula, Vocabulary, WorldSet, HARD_MAX_VARS};
use crate::report::CheckReport;
use crate::revision::{check_revision_postulates, evaluate_chain, revise_by_set, revise_entrenchment, revise_sequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    MainTheorem,
    Postulates,
    EAxioms,
    Props,
    Rational,
    Dp,
    SetDifference,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::MainTheorem,
        Suite::Postulates,
        Suite::EAxioms,
        Suite::Props,
        Suite::Rational,
        Suite::Dp,
        Suite::SetDifference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::Postulates => "postulates",
            Suite::EAxioms => "e-axioms",
            Suite::Props => "props",
            Suite::Rational => "rational",
            Suite::Dp => "dp",
            Suite::SetDifference => "set-difference",
        }
    }

    fn instance(self, rng: &mut InstanceRng) -> Outcome {
        match self {
            Suite::MainTheorem => main_theorem_instance(rng),
            Suite::Postulates => postulates_instance(rng),
            Suite::EAxioms => e_axioms_instance(rng),
            Suite::Props => props_instance(rng),
            Suite::Rational => rational_instance(rng),
            Suite::Dp => dp_instance(rng),
            Suite::SetDifference => set_difference_instance(rng),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            format!("unknown suite `{s}` (expected one of: {})", names.join(", "))
        })
    }
}

/// Result of one random instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Outcome {
    checks: usize,
    failure: Option<String>,
}

impl Outcome {
    fn absorb(&mut self, report: CheckReport, vocab: &Vocabulary, context: &str) {
        self.checks += report.checks;
        if self.failure.is_none() {
            if let Some(v) = report.violation {
                self.failure = Some(format!("{context}: {}", v.render(vocab)));
            }
        }
    }

    fn check(&mut self, holds: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !holds && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFailure {
    pub index: u64,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub checks: usize,
    pub first_failure: Option<InstanceFailure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn instances(&self) -> usize {
        self.passed + self.failed
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite {} (seed {}): {} instances, {} passed, {} failed, {} checks",
            self.suite,
            self.seed,
            self.instances(),
            self.passed,
            self.failed,
            self.checks
        )?;
        if let Some(first) = &self.first_failure {
            write!(f, "\nfirst failure at instance {}: {}", first.index, first.description)?;
        }
        Ok(())
    }
}

/// Runs `count` instances of `suite`.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> SuiteReport {
    let outcomes: Vec<Outcome> = (0..count as u64)
        .into_par_iter()
        .map(|index| suite.instance(&mut instance_rng(seed, index)))
        .collect();
    let mut report = SuiteReport {
        suite,
        seed,
        passed: 0,
        failed: 0,
        checks: 0,
        first_failure: None,
    };
    for (index, outcome) in outcomes.into_iter().enumerate() {
        report.checks += outcome.checks;
        match outcome.failure {
            None => report.passed += 1,
            Some(description) => {
                report.failed += 1;
                report.first_failure.get_or_insert(InstanceFailure {
                    index: index as u64,
                    description,
                });
            }
        }
    }
    report
}

fn render_pair(vocab: &Vocabulary, theta: &Formula, phi: &Formula) -> String {
    format!("θ = {}, φ = {}", theta.display(vocab), phi.display(vocab))
}

fn render_set(vocab: &Vocabulary, set: &[Formula]) -> String {
    let parts: Vec<String> = set.iter().map(|f| f.display(vocab).to_string()).collect();
    format!("{{{}}}", parts.join("; "))
}

fn render_base(base: &DefaultBase) -> String {
    let parts: Vec<String> = base
        .defaults()
        .iter()
        .map(|d| d.display(base.vocab()).to_string())
        .collect();
    format!("[{}]", parts.join(", "))
}

/// `base_sample` plus `extra` random formulas of depth at most `depth`.
fn formula_sample(rng: &mut InstanceRng, vocab: &Vocabulary, extra: usize, depth: usize) -> Vec<Formula> {
    let random = gen::random_formulas(rng, vocab.len(), extra, depth);
    dedup_formulas(base_sample(vocab).into_iter().chain(random))
}

fn random_base(rng: &mut InstanceRng, max_vars: usize, max_defaults: usize) -> DefaultBase {
    let vocab = gen::vocabulary(rng.gen_range(1..=max_vars));
    gen::random_admissible_base(rng, &vocab, max_defaults)
}

/// Query pairs for the main theorem: every pair of literal conjunctions plus
/// 200 random pairs of depth at most 4.
pub fn main_theorem_queries(rng: &mut InstanceRng, vocab: &Vocabulary) -> Vec<(Formula, Formula)> {
    let conjunctions = gen::literal_conjunctions(vocab);
    let mut queries: Vec<(Formula, Formula)> = conjunctions
        .iter()
        .flat_map(|a| conjunctions.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    for _ in 0..200 {
        let theta = gen::random_formula(rng, vocab.len(), 4);
        let phi = gen::random_formula(rng, vocab.len(), 4);
        queries.push((theta, phi));
    }
    queries
}

fn main_theorem_instance(rng: &mut InstanceRng) -> Outcome {
    let base = random_base(rng, 4, 5);
    let vocab = base.vocab();
    let queries = main_theorem_queries(rng, vocab);
    let zp = z_partition(&base).expect("admissible base");
    let oracle = LexClosure::with_partition(&base, zp.clone());
    let sequence = lex_sequence_with(&base, &zp).expect("chain steps are full or empty");
    let mut extensions: HashMap<WorldSet, Vec<WorldSet>> = HashMap::new();
    let mut out = Outcome::default();
    for (theta, phi) in &queries {
        let (ts, ps) = (models(theta, vocab), models(phi, vocab));
        let exts = extensions.entry(ts.clone()).or_insert_with(|| oracle.extensions(&ts));
        let direct = exts.iter().all(|e| e.is_subset(&ps));
        let revised = sequence.infers_sets(&ts, &ps);
        out.check(direct == revised, || {
            format!(
                "base {}: {} direct {direct}, revision {revised}",
                render_base(&base),
                render_pair(vocab, theta, phi)
            )
        });
        if out.failed() {
            break;
        }
    }
    out
}

fn postulates_instance(rng: &mut InstanceRng) -> Outcome {
    let vocab = gen::vocabulary(3);
    let width = vocab.world_count();
    let mut out = Outcome::default();

    let k = gen::random_relation(rng, &vocab, 0.1);
    let e = gen::random_relation(rng, &vocab, 0.1);
    let sample = gen::random_formulas(rng, vocab.len(), 16, 3);
    let report = check_revision_postulates(&k, &e, &sample, &vocab);
    let context = format!("K = {}, E = {}", k.carrier().render(&vocab), e.carrier().render(&vocab));
    out.absorb(report, &vocab, &context);

    // Padding either side with empty layers leaves the result unchanged.
    let (u, v) = (k.carrier(), e.carrier());
    let padded_u = u.with_empty_layer(rng.gen_range(0..=u.layers().len()));
    let padded_v = v.with_empty_layer(rng.gen_range(0..=v.layers().len()));
    let plain = revise_sequence(u, v).expect("Υ inputs");
    let padded = revise_sequence(&padded_u, &padded_v).expect("Υ inputs");
    out.check(plain == padded, || format!("padding changed {context}"));

    // Associativity with a nonempty middle, on sequences and on relations.
    let u = gen::random_upsilon(rng, width, 0.2);
    let v = gen::random_full_sequence(rng, width);
    let w = gen::random_upsilon(rng, width, 0.2);
    let left = revise_sequence(&revise_sequence(&u, &v).unwrap(), &w).unwrap();
    let right = revise_sequence(&u, &revise_sequence(&v, &w).unwrap()).unwrap();
    out.check(left == right, || {
        format!(
            "sequence associativity: U = {}, V = {}, W = {}",
            u.render(&vocab),
            v.render(&vocab),
            w.render(&vocab)
        )
    });

    let a = gen::random_relation(rng, &vocab, 0.2);
    let b = EntrenchmentRelation::from_sequence(&gen::random_full_sequence(rng, width)).unwrap();
    let c = gen::random_relation(rng, &vocab, 0.2);
    let left = revise_entrenchment(&revise_entrenchment(&a, &b), &c);
    let right = revise_entrenchment(&a, &revise_entrenchment(&b, &c));
    out.check(left == right, || {
        format!(
            "relation associativity: {} * {} * {}",
            a.carrier().render(&vocab),
            b.carrier().render(&vocab),
            c.carrier().render(&vocab)
        )
    });
    out
}

fn e_axioms_instance(rng: &mut InstanceRng) -> Outcome {
    let vocab = gen::vocabulary(rng.gen_range(2..=3));
    let mut out = Outcome::default();
    let sample = gen::random_formulas(rng, vocab.len(), 10, 3);

    let set = gen::random_formula_set(rng, vocab.len(), 4, 2);
    let from_set = entrenchment_from_set(&set, &vocab);
    let report = check_e_axioms(&from_set, &sample, &vocab);
    out.absorb(report, &vocab, &format!("E = {}", render_set(&vocab, &set)));

    let u = gen::random_upsilon(rng, vocab.world_count(), 0.15);
    let from_sequence = EntrenchmentRelation::from_sequence(&u).expect("Υ");
    let report = check_e_axioms(&from_sequence, &sample, &vocab);
    out.absorb(report, &vocab, &format!("U = {}", u.render(&vocab)));
    out
}

fn props_instance(rng: &mut InstanceRng) -> Outcome {
    let vocab = gen::vocabulary(rng.gen_range(2..=3));
    let width = vocab.world_count();
    let sample = formula_sample(rng, &vocab, 8, 3);
    let mut out = Outcome::default();

    // Consequence relation and entrenchment of a random Υ sequence.
    let u = gen::random_upsilon(rng, width, 0.15);
    let relation = EntrenchmentRelation::from_sequence(&u).expect("Υ");
    let ctx = u.render(&vocab);
    for theta in &sample {
        let believed = relation.belief_holds(theta);
        out.check(believed == u.infers(&Formula::Top, theta), || {
            format!("belief vs ⊤-inference on U = {ctx}: θ = {}", theta.display(&vocab))
        });
        for phi in &sample {
            let pair = || render_pair(&vocab, theta, phi);
            out.check(relation.infers(theta, phi) == u.infers(theta, phi), || {
                format!("round trip on U = {ctx}: {}", pair())
            });
            out.check(relation.leq(theta, phi) == relation.leq_literal(theta, phi), || {
                format!("derived vs literal comparator on U = {ctx}: {}", pair())
            });
            if believed && entails(std::slice::from_ref(theta), phi, &vocab) {
                out.check(relation.belief_holds(phi), || {
                    format!("belief closure on U = {ctx}: {}", pair())
                });
            }
        }
    }

    // Revising a full sequence by a single sentence.
    let full = gen::random_full_sequence(rng, width);
    let full_rel = EntrenchmentRelation::from_sequence(&full).unwrap();
    for theta in &sample {
        let revised = revise_entrenchment(&full_rel, &entrenchment_from_set(std::slice::from_ref(theta), &vocab));
        for phi in &sample {
            out.check(revised.belief_holds(phi) == full.infers(theta, phi), || {
                format!(
                    "single-sentence revision of U = {}: {}",
                    full.render(&vocab),
                    render_pair(&vocab, theta, phi)
                )
            });
        }
    }

    // Relations generated by a sentence set.
    let set = gen::random_formula_set(rng, vocab.len(), 4, 2);
    let from_set = entrenchment_from_set(&set, &vocab);
    let ctx = render_set(&vocab, &set);
    for theta in &sample {
        out.check(from_set.belief_holds(theta) == entails(&set, theta, &vocab), || {
            format!("Bel = Cn(E) for E = {ctx}: {}", theta.display(&vocab))
        });
        for phi in &sample {
            let strict = from_set.strictly_less(theta, phi);
            out.check(cardinality_strictly_prec(&set, theta, phi, &vocab) == strict, || {
                format!(
                    "cardinality form vs ranks for E = {ctx}: {}",
                    render_pair(&vocab, theta, phi)
                )
            });
            if inclusion_strictly_prec(&set, theta, phi, &vocab) {
                out.check(strict, || {
                    format!(
                        "inclusion form not extended for E = {ctx}: {}",
                        render_pair(&vocab, theta, phi)
                    )
                });
            }
        }
    }

    // Default bases: stratification and revising the lex chain by θ.
    let base = gen::random_admissible_base(rng, &vocab, 5);
    let zp = z_partition(&base).expect("admissible");
    check_stratification(&base, &zp, &mut out);
    let mut chained = EntrenchmentRelation::initial(&vocab);
    for stratum in stratum_materials(&base, &zp) {
        chained = revise_by_set(&chained, &stratum, &vocab);
    }
    let closure = LexClosure::with_partition(&base, zp);
    for theta in &sample {
        let revised = revise_by_set(&chained, std::slice::from_ref(theta), &vocab);
        for phi in &sample {
            out.check(closure.infers(theta, phi) == revised.belief_holds(phi), || {
                format!(
                    "revising the chain by θ, base {}: {}",
                    render_base(&base),
                    render_pair(&vocab, theta, phi)
                )
            });
        }
    }
    out
}

fn check_stratification(base: &DefaultBase, zp: &ZPartition, out: &mut Outcome) {
    let mut seen = vec![0usize; base.len()];
    for (i, stratum) in zp.strata().iter().enumerate() {
        out.check(!stratum.is_empty(), || {
            format!("stratum {i} empty in {}", render_base(base))
        });
        let upper: Vec<_> = zp.strata()[i..]
            .iter()
            .flatten()
            .map(|&d| base.defaults()[d].clone())
            .collect();
        let with_lower: Vec<_> = zp.strata()[i.saturating_sub(1)..]
            .iter()
            .flatten()
            .map(|&d| base.defaults()[d].clone())
            .collect();
        for &d in stratum {
            seen[d] += 1;
            let delta = &base.defaults()[d];
            out.check(tolerates(&upper, delta, base.vocab()), || {
                format!("default {d} not tolerated by strata ≥ {i} in {}", render_base(base))
            });
            if i > 0 {
                out.check(!tolerates(&with_lower, delta, base.vocab()), || {
                    format!("default {d} could sit below stratum {i} in {}", render_base(base))
                });
            }
        }
    }
    out.check(seen.iter().all(|&c| c == 1), || {
        format!("strata do not partition {}", render_base(base))
    });
}

fn rational_instance(rng: &mut InstanceRng) -> Outcome {
    let base = random_base(rng, 3, 5);
    let vocab = base.vocab().clone();
    let closure = LexClosure::new(&base).expect("admissible");
    let sample = formula_sample(rng, &vocab, 6, 3);
    let mut out = Outcome::default();
    let report = check_rational_postulates(|t, p| closure.infers(t, p), &sample, &vocab);
    out.absorb(report, &vocab, &format!("base {}", render_base(&base)));

    // Consistency preservation over every premise, up to equivalence.
    let width = vocab.world_count();
    let bottom = WorldSet::empty(width);
    for mask in 0u64..(1u64 << width) {
        let theta = WorldSet::from_worlds(width, (0..width).filter(|w| (mask >> w) & 1 == 1));
        let infers_bottom = closure.infers_sets(&theta, &bottom);
        out.check(infers_bottom == theta.is_empty(), || {
            format!(
                "consistency preservation, base {}: premise models {}",
                render_base(&base),
                vocab.render_set(&theta)
            )
        });
    }
    out
}

/// `φ ⊨ ¬θ` is forced by taking `φ ∧ ¬θ`; `θ` is drawn satisfiable.
fn dp_instance(rng: &mut InstanceRng) -> Outcome {
    let vocab = gen::vocabulary(rng.gen_range(2..=3));
    let psi = gen::random_relation(rng, &vocab, 0.1);
    let theta = loop {
        let t = gen::random_formula(rng, vocab.len(), 3);
        if is_consistent(std::slice::from_ref(&t), &vocab) {
            break t;
        }
    };
    let raw = gen::random_formula(rng, vocab.len(), 3);
    let phi = Formula::and(raw, Formula::not(theta.clone()));
    let sample = formula_sample(rng, &vocab, 8, 3);

    let twice = revise_by_set(
        &revise_by_set(&psi, std::slice::from_ref(&theta), &vocab),
        std::slice::from_ref(&phi),
        &vocab,
    );
    let once = revise_by_set(&psi, std::slice::from_ref(&phi), &vocab);
    let mut out = Outcome::default();
    let describe = || {
        format!(
            "Ψ = {}, {}",
            psi.carrier().render(&vocab),
            render_pair(&vocab, &theta, &phi)
        )
    };
    for chi in &sample {
        out.check(twice.belief_holds(chi) == once.belief_holds(chi), || {
            format!("{} disagree on {}", describe(), chi.display(&vocab))
        });
    }
    let same_theory = twice.is_absurd() == once.is_absurd() && twice.most_plausible() == once.most_plausible();
    out.check(same_theory, describe);
    out
}

fn set_difference_instance(rng: &mut InstanceRng) -> Outcome {
    let vocab = gen::vocabulary(rng.gen_range(2..=3));
    let prior = gen::random_relation(rng, &vocab, 0.1);
    let e2 = loop {
        let set = dedup_formulas(gen::random_formula_set(rng, vocab.len(), 5, 2));
        if is_consistent(&set, &vocab) {
            break set;
        }
    };
    let e1 = gen::random_subset(rng, &e2);
    let difference: Vec<Formula> = e2.iter().filter(|f| !e1.contains(f)).cloned().collect();
    let left = revise_by_set(&revise_by_set(&prior, &e2, &vocab), &e1, &vocab);
    let right = revise_by_set(&revise_by_set(&prior, &difference, &vocab), &e1, &vocab);
    let mut out = Outcome::default();
    out.check(left == right, || {
        format!(
            "prior {}, E2 = {}, E1 = {}",
            prior.carrier().render(&vocab),
            render_set(&vocab, &e2),
            render_set(&vocab, &e1)
        )
    });

    let base = random_base(rng, 4, 5);
    let zp = z_partition(&base).expect("admissible");
    let by_strata = evaluate_chain(&lex_chain(&base, &zp)).expect("Υ steps");
    let by_suffixes = evaluate_chain(&theta_chain(&base, &zp)).expect("Υ steps");
    out.check(by_strata == by_suffixes, || {
        format!("suffix rewrite fails for base {}", render_base(&base))
    });
    out
}

/// One entry of a conjecture sweep.
#[derive(Debug, Clone)]
pub struct SweepEntry {
    pub index: u64,
    pub base: DefaultBase,
    pub report: ConjectureReport,
}

/// Runs the conjunction-chain comparison on `count` random admissible bases
/// (up to `max_vars` variables and 5 defaults), queried on all literal pairs.
pub fn conjecture_sweep(seed: u64, count: usize, max_vars: usize) -> Result<Vec<SweepEntry>> {
    if max_vars == 0 {
        return Err(Error::Vocabulary("at least one variable is required".into()));
    }
    if max_vars > HARD_MAX_VARS {
        return Err(Error::TooManyVariables {
            count: max_vars,
            cap: HARD_MAX_VARS,
        });
    }
    (0..count as u64)
        .into_par_iter()
        .map(|index| {
            let mut rng = instance_rng(seed, index);
            let base = random_base(&mut rng, max_vars, 5);
            let report = conjecture_check(&base, &literal_queries(base.vocab()))?;
            Ok(SweepEntry { index, base, report })
        })
        .collect()
}
